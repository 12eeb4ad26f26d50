package org.eclipse.jdt.internal.ui.text;

/**
 * Indents new lines to match the enclosing block.
 */
public class AutoIndentStrategy {
    private int tabWidth = 4;

    public void customizeDocumentCommand(IDocument document, DocumentCommand command) {
        if (command.text.equals("\n")) {
            command.text = "\n" + indentOf(document, command.offset);
        }
    }

    private String indentOf(IDocument document, int offset) {
        int line = document.getLineOfOffset(offset);
        return leadingWhitespace(document.getLine(line));
    }

    private String leadingWhitespace(String line) {
        int end = 0;
        while (end < line.length() && Character.isWhitespace(line.charAt(end))) {
            end++;
        }
        return line.substring(0, end);
    }
}
