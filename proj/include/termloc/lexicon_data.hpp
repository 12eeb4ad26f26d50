#pragma once

// Bundled POS lexicon: one "<word>\t<tag>" per line, most frequent tag of
// each word, tags NOUN VERB ADJ ADV OTHER.

namespace termloc::data {

inline constexpr const char* kDefaultLexicon = R"(a	OTHER
able	ADJ
about	OTHER
above	OTHER
abstract	ADJ
access	NOUN
action	NOUN
actions	NOUN
actually	ADV
add	VERB
added	VERB
additional	ADJ
address	NOUN
adds	VERB
after	OTHER
again	ADV
all	OTHER
allow	VERB
allowed	VERB
allows	VERB
already	ADV
also	ADV
although	OTHER
always	ADV
an	OTHER
and	OTHER
annotation	NOUN
annotations	NOUN
any	OTHER
appear	VERB
appeared	VERB
appears	VERB
application	NOUN
are	VERB
argument	NOUN
arguments	NOUN
array	NOUN
as	OTHER
at	OTHER
automatically	ADV
available	ADJ
bad	ADJ
bar	NOUN
be	VERB
because	OTHER
been	VERB
before	OTHER
being	VERB
below	OTHER
between	OTHER
big	ADJ
block	NOUN
blocks	NOUN
both	OTHER
bottom	ADJ
branch	NOUN
breakpoint	NOUN
broken	ADJ
build	NOUN
builds	NOUN
bundle	NOUN
but	OTHER
button	NOUN
by	OTHER
cache	NOUN
call	NOUN
called	VERB
calls	NOUN
can	OTHER
case	NOUN
cases	NOUN
cause	VERB
caused	VERB
causes	VERB
certain	ADJ
change	NOUN
changed	VERB
changes	NOUN
character	NOUN
characters	NOUN
check	VERB
checked	VERB
checks	VERB
class	NOUN
clean	ADJ
clear	ADJ
click	VERB
clicked	VERB
clicks	VERB
client	NOUN
close	VERB
closed	VERB
closes	VERB
code	NOUN
collection	NOUN
color	NOUN
column	NOUN
command	NOUN
commands	NOUN
commit	NOUN
compile	VERB
compiled	VERB
compiler	NOUN
compiles	VERB
complex	ADJ
component	NOUN
components	NOUN
configuration	NOUN
connection	NOUN
consider	VERB
console	NOUN
contain	VERB
contained	VERB
container	NOUN
contains	VERB
content	NOUN
contents	NOUN
context	NOUN
copied	VERB
copies	VERB
copy	VERB
correct	ADJ
correctly	ADV
could	OTHER
create	VERB
created	VERB
creates	VERB
current	ADJ
currently	ADV
custom	NOUN
data	NOUN
date	NOUN
debug	VERB
debugged	VERB
debugger	NOUN
default	ADJ
delete	VERB
deleted	VERB
deletes	VERB
description	NOUN
diagram	NOUN
dialog	NOUN
did	VERB
different	ADJ
directly	ADV
directory	NOUN
dirty	ADJ
disable	VERB
disabled	VERB
display	VERB
displayed	VERB
displays	VERB
do	VERB
document	NOUN
documents	NOUN
does	VERB
down	OTHER
during	OTHER
dynamic	ADJ
each	OTHER
easy	ADJ
edit	VERB
edited	VERB
editor	NOUN
either	OTHER
element	NOUN
empty	ADJ
enable	VERB
enabled	VERB
entries	NOUN
entry	NOUN
error	NOUN
errors	NOUN
even	ADV
event	NOUN
events	NOUN
every	OTHER
exception	NOUN
exceptions	NOUN
execute	VERB
executed	VERB
expect	VERB
expected	VERB
expression	NOUN
expressions	NOUN
extension	NOUN
extensions	NOUN
external	ADJ
extra	ADJ
fail	VERB
failed	VERB
fails	VERB
false	ADJ
fast	ADJ
feature	NOUN
features	NOUN
few	ADJ
field	NOUN
fields	NOUN
file	NOUN
files	NOUN
filter	VERB
filtered	VERB
final	ADJ
find	VERB
finds	VERB
first	ADJ
fix	VERB
fixed	VERB
fixes	VERB
flat	ADJ
focus	NOUN
folder	NOUN
folders	NOUN
font	NOUN
for	OTHER
format	NOUN
found	VERB
frame	NOUN
frames	NOUN
framework	NOUN
from	OTHER
full	ADJ
generic	ADJ
get	VERB
gets	VERB
give	VERB
given	VERB
gives	VERB
global	ADJ
good	ADJ
got	VERB
had	VERB
handle	VERB
handled	VERB
handler	NOUN
handlers	NOUN
handles	VERB
happen	VERB
happened	VERB
happens	VERB
hard	ADJ
has	VERB
have	VERB
he	OTHER
height	NOUN
her	OTHER
here	ADV
hidden	ADJ
hierarchical	ADJ
hierarchically	ADV
hierarchy	NOUN
high	ADJ
his	OTHER
history	NOUN
host	NOUN
how	OTHER
i	OTHER
icon	NOUN
if	OTHER
image	NOUN
images	NOUN
implement	VERB
implemented	VERB
important	ADJ
impossible	ADJ
in	OTHER
include	VERB
included	VERB
includes	VERB
incorrect	ADJ
incorrectly	ADV
index	NOUN
indexes	NOUN
inner	ADJ
input	NOUN
install	VERB
installed	VERB
instance	NOUN
instead	ADV
interface	NOUN
internal	ADJ
into	OTHER
invalid	ADJ
is	VERB
it	OTHER
item	NOUN
items	NOUN
its	OTHER
java	NOUN
job	NOUN
jobs	NOUN
just	ADV
keep	VERB
keeps	VERB
kept	VERB
key	NOUN
keys	NOUN
label	NOUN
large	ADJ
last	ADJ
launch	VERB
launched	VERB
layout	NOUN
left	ADJ
let	VERB
lets	VERB
level	NOUN
levels	NOUN
library	NOUN
line	NOUN
lines	NOUN
link	NOUN
links	NOUN
list	NOUN
listener	NOUN
listeners	NOUN
load	VERB
loaded	VERB
loads	VERB
local	ADJ
log	NOUN
logs	NOUN
long	ADJ
look	VERB
looks	VERB
low	ADJ
made	VERB
main	ADJ
make	VERB
makes	VERB
manually	ADV
many	ADJ
map	NOUN
match	NOUN
matches	NOUN
may	OTHER
maybe	ADV
me	OTHER
memory	NOUN
menu	NOUN
message	NOUN
messages	NOUN
method	NOUN
methods	NOUN
might	OTHER
missing	ADJ
modal	ADJ
mode	NOUN
model	NOUN
models	NOUN
module	NOUN
move	VERB
moved	VERB
moves	VERB
multiple	ADJ
must	OTHER
my	OTHER
name	NOUN
names	NOUN
need	VERB
needed	VERB
needs	VERB
neither	OTHER
nested	ADJ
network	NOUN
never	ADV
new	ADJ
next	ADJ
no	OTHER
node	NOUN
nodes	NOUN
nor	OTHER
normal	ADJ
not	ADV
now	ADV
null	ADJ
number	NOUN
numbers	NOUN
object	NOUN
objects	NOUN
odd	ADJ
of	OTHER
off	OTHER
often	ADV
old	ADJ
on	OTHER
only	ADV
onto	OTHER
open	VERB
opened	VERB
opens	VERB
operation	NOUN
operations	NOUN
option	NOUN
options	NOUN
or	OTHER
order	NOUN
original	ADJ
other	ADJ
otherwise	ADV
our	OTHER
out	OTHER
outer	ADJ
output	NOUN
over	OTHER
package	NOUN
page	NOUN
panel	NOUN
panels	NOUN
parameter	NOUN
parameters	NOUN
parser	NOUN
part	NOUN
parts	NOUN
paste	VERB
patch	NOUN
path	NOUN
paths	NOUN
perhaps	ADV
perspective	NOUN
plain	ADJ
plug	NOUN
plugin	NOUN
point	NOUN
points	NOUN
port	NOUN
possible	ADJ
preference	NOUN
preferences	NOUN
press	VERB
pressed	VERB
previous	ADJ
primary	ADJ
print	VERB
printed	VERB
prints	VERB
private	ADJ
probably	ADV
problem	NOUN
process	NOUN
progress	NOUN
project	NOUN
properly	ADV
properties	NOUN
property	NOUN
provide	VERB
provided	VERB
provider	NOUN
providers	NOUN
provides	VERB
public	ADJ
put	VERB
puts	VERB
queries	NOUN
query	NOUN
quick	ADJ
quickly	ADV
ran	VERB
read	VERB
reads	VERB
really	ADV
recent	ADJ
record	NOUN
records	NOUN
reference	NOUN
references	NOUN
refresh	VERB
refreshed	VERB
release	NOUN
remove	VERB
removed	VERB
removes	VERB
rename	VERB
renamed	VERB
render	VERB
rendered	VERB
report	NOUN
reported	VERB
reports	NOUN
repository	NOUN
reproduce	VERB
reproduced	VERB
request	NOUN
requests	NOUN
resize	VERB
resized	VERB
resource	NOUN
resources	NOUN
response	NOUN
responses	NOUN
result	NOUN
return	VERB
returned	VERB
returns	VERB
right	ADJ
row	NOUN
run	VERB
runs	VERB
same	ADJ
save	VERB
saved	VERB
saves	VERB
scope	NOUN
search	NOUN
searched	VERB
secondary	ADJ
see	VERB
seem	VERB
seen	VERB
select	VERB
selected	VERB
selection	NOUN
selects	VERB
server	NOUN
service	NOUN
session	NOUN
set	VERB
sets	VERB
several	ADJ
shall	OTHER
she	OTHER
short	ADJ
should	OTHER
show	VERB
shown	VERB
shows	VERB
side	NOUN
similar	ADJ
simple	ADJ
since	OTHER
single	ADJ
size	NOUN
slow	ADJ
slowly	ADV
small	ADJ
so	OTHER
some	OTHER
sometimes	ADV
sort	VERB
sorted	VERB
source	NOUN
specific	ADJ
start	VERB
started	VERB
starts	VERB
state	NOUN
statement	NOUN
statements	NOUN
static	ADJ
status	NOUN
still	ADV
stop	VERB
stopped	VERB
stops	VERB
strange	ADJ
string	NOUN
strings	NOUN
structure	NOUN
such	OTHER
support	NOUN
supported	VERB
supports	VERB
system	NOUN
tab	NOUN
table	NOUN
tabs	NOUN
take	VERB
takes	VERB
target	NOUN
targets	NOUN
task	NOUN
tasks	NOUN
template	NOUN
templates	NOUN
test	NOUN
tests	NOUN
text	NOUN
than	OTHER
that	OTHER
the	OTHER
their	OTHER
them	OTHER
then	ADV
there	ADV
these	OTHER
they	OTHER
this	OTHER
those	OTHER
though	OTHER
thread	NOUN
threads	NOUN
through	OTHER
throw	VERB
thrown	VERB
throws	VERB
time	NOUN
title	NOUN
to	OTHER
too	ADV
took	VERB
toolbar	NOUN
top	ADJ
tree	NOUN
tried	VERB
true	ADJ
try	VERB
type	NOUN
typed	VERB
types	NOUN
unable	ADJ
unclear	ADJ
under	OTHER
unless	OTHER
until	OTHER
up	OTHER
update	VERB
updated	VERB
updates	VERB
url	NOUN
us	OTHER
use	VERB
used	VERB
useful	ADJ
useless	ADJ
user	NOUN
users	NOUN
uses	VERB
using	VERB
valid	ADJ
value	NOUN
values	NOUN
variable	NOUN
variables	NOUN
version	NOUN
versions	NOUN
very	ADV
view	NOUN
visible	ADJ
want	VERB
wanted	VERB
wants	VERB
was	VERB
way	NOUN
we	OTHER
weird	ADJ
were	VERB
what	OTHER
when	OTHER
where	OTHER
which	OTHER
while	OTHER
who	OTHER
whole	ADJ
whom	OTHER
whose	OTHER
why	OTHER
width	NOUN
will	OTHER
window	NOUN
with	OTHER
within	OTHER
without	OTHER
wizard	NOUN
word	NOUN
words	NOUN
work	VERB
workbench	NOUN
worked	VERB
works	VERB
workspace	NOUN
would	OTHER
write	VERB
writes	VERB
written	VERB
wrong	ADJ
you	OTHER
your	OTHER
)";

} // namespace termloc::data
