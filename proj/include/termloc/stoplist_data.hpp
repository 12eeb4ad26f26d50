#pragma once

// Bundled English stop list: a standard general-purpose list plus words that
// are noise in change-request prose.

namespace termloc::data {

inline constexpr const char* kDefaultStopList = R"(a
about
above
after
again
against
ain
all
also
am
an
and
any
are
aren
as
at
be
because
been
before
being
below
between
both
but
by
can
could
couldn
d
did
didn
do
does
doesn
doing
don
down
during
e
each
eg
either
etc
few
for
from
further
g
had
hadn
has
hasn
have
haven
having
he
her
here
hers
herself
him
himself
his
how
however
i
ie
if
in
into
is
isn
it
its
itself
just
ll
m
ma
may
me
might
mightn
more
most
must
mustn
my
myself
needn
neither
no
nor
not
now
o
of
off
on
once
only
or
other
otherwise
our
ours
ourselves
out
over
own
re
s
same
shall
shan
she
should
shouldn
so
some
such
t
than
that
the
their
theirs
them
themselves
then
there
these
they
this
those
through
to
too
under
until
up
ve
very
was
wasn
we
were
weren
what
when
where
which
while
who
whom
why
will
with
won
would
wouldn
y
yet
you
your
yours
yourself
yourselves
bug
issue
problem
example
instance
consider
result
results
show
shown
seem
seems
please
thanks
)";

} // namespace termloc::data
