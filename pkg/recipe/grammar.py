"""Lark grammar of the recipe language.

    # comment
    let M = connsum_cp2bar(catalog(1), 14)
    let Z = twistor(M)
    emit blowup(Z, 6)
"""

RECIPE_GRAMMAR = r"""
start: let_stmt* emit_stmt

let_stmt: "let" NAME "=" expr
emit_stmt: "emit" expr

?expr: call
     | NAME            -> ref
     | SIGNED_INT      -> integer
     | ESCAPED_STRING  -> string

call: NAME "(" arguments? ")"
arguments: expr ("," expr)*

COMMENT: /#[^\n]*/

%import common.CNAME -> NAME
%import common.SIGNED_INT
%import common.ESCAPED_STRING
%import common.WS
%ignore WS
%ignore COMMENT
"""
