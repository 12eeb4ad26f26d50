package org.example.lang;

import java.util.ArrayList;
import java.util.Comparator;
import java.util.List;

/**
 * Recursive descent parser for arithmetic expressions.
 */
public class Parser {
    private final String source;
    private int cursor;

    public Expression parse(String text) throws ParseException {
        if (text == null || text.isEmpty()) {
            throw new ParseException("empty expression", 0);
        }
        cursor = 0;
        Expression root = parseExpression(text);
        skipWhitespace(text);
        return root;
    }

    private Expression parseExpression(String text) throws ParseException {
        List<Expression> operands = new ArrayList<>();
        operands.sort(new Comparator<Expression>() {
            @Override
            public int compare(Expression left, Expression right) {
                if (left.precedence() == right.precedence()) {
                    return 0;
                }
                return left.precedence() - right.precedence();
            }
        });
        while (cursor < text.length()) {
            char token = text.charAt(cursor);
            if (token == '(') {
                cursor++;
                operands.add(parseExpression(text));
            }
            cursor++;
        }
        return Expression.combine(operands);
    }

    private void skipWhitespace(String text) {
        while (cursor < text.length() && Character.isWhitespace(text.charAt(cursor))) {
            cursor++;
        }
    }
}
