"""Lark grammar for .catv workspaces."""

GRAMMAR = r"""
    start: _decl*

    _decl: category
         | group
         | builtin
         | product
         | variance
         | functor
         | setfunctor
         | hom
         | span
         | partition
         | transformation

    // categories
    category: "category" NAME "{" (_cat_stmt _sep?)* "}"
    _cat_stmt: objects_stmt | mor_stmt | compose_stmt
    objects_stmt: "objects" ":" label ("," label)*
    mor_stmt: "mor" label ":" label "->" label
    compose_stmt: "compose" label "." label "=" label

    group: "group" NAME "table" "{" elements_stmt _sep? (row_stmt _sep?)* "}"
    elements_stmt: "elements" ":" label ("," label)*
    row_stmt: "row" label ":" label+

    builtin: "builtin" NAME "=" NAME "(" [INT ("," INT)*] ")"
    product: "product" NAME "=" NAME ("*" NAME)+

    // variances
    variance: "variance" NAME "on" NAME (variance_body | variance_kind)
    variance_body: "{" (_var_stmt _sep?)* "}"
    _var_stmt: e_stmt | m_stmt
    e_stmt: "E" ":" [ref ("," ref)*]
    m_stmt: "M" ":" [ref ("," ref)*]
    variance_kind: COVARIANT | CONTRAVARIANT | "index" "(" INT ("," INT)* ")"
    COVARIANT: "covariant"
    CONTRAVARIANT: "contravariant"

    // functors
    functor: "functor" NAME ":" NAME "->" NAME ["variance" NAME] "{" (_fun_stmt _sep?)* "}"
    _fun_stmt: obj_map | mor_map
    obj_map: "obj" ref "=>" ref
    mor_map: "mor" ref "=>" ref

    setfunctor: "setfunctor" NAME ":" NAME ["variance" NAME] "{" (_set_stmt _sep?)* "}"
    _set_stmt: obj_size | mor_array
    obj_size: "obj" ref "=>" INT
    mor_array: "mor" ref "=>" index_array

    hom: "hom" NAME "on" NAME

    // spans, partitions, transformations
    span: "span" NAME ":" NAME "=>" NAME ["*" NAME] "{" (_span_stmt _sep?)* "}"
    _span_stmt: span_obj | span_mor | SPAN_MODE
    span_obj: "obj" ref "=>" ref ["," ref]
    span_mor: "mor" ref "=>" ref ["," ref]
    SPAN_MODE: "diagonal" | "identity"

    partition: "partition" NAME (expression_source)? "over" "(" name_list ";" name_list ")" ["{" class_list "}"]
    expression_source: "from" ESCAPED_STRING
    name_list: NAME ("," NAME)*
    class_list: position_class*
    position_class: "{" INT ("," INT)* "}"

    transformation: "transformation" NAME ":" NAME "=>" NAME "along" NAME "{" (component _sep?)* "}"
    component: "at" ref "=>" (ref | index_array)

    // references
    index_array: "[" [INT ("," INT)*] "]"
    ?ref: label | tuple_ref
    tuple_ref: "(" ref ("," ref)* ")"
    label: NAME | ESCAPED_STRING | INT

    _sep: ";"

    NAME: /[A-Za-z_][A-Za-z0-9_']*/
    COMMENT: /#[^\n]*/

    %import common.INT
    %import common.ESCAPED_STRING
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""
