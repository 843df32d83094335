import pytest

from api_evolve import jast

from conftest import corpus_java_files


def read(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return fh.read()


def test_minimal_class():
    unit = jast.parse("class A { void m() { v.vibrate(5); } }")
    assert len(unit.types) == 1
    tdecl = unit.types[0]
    assert tdecl.name == "A"
    assert [m.name for m in tdecl.methods] == ["m"]
    (stmt,) = tdecl.methods[0].body
    assert isinstance(stmt, jast.ExprStmt)
    call = stmt.expr
    assert isinstance(call, jast.MethodCall)
    assert isinstance(call.receiver, jast.Name) and call.receiver.identifier == "v"
    assert call.name == "vibrate"
    assert [a.lexeme for a in call.args] == ["5"]


def test_vibrate_example_structure(vibrate_example):
    unit = jast.parse(vibrate_example)
    wrapper = unit.types[0]
    assert wrapper.implicit
    fields = {f.name: f for f in wrapper.fields}
    assert fields["DURATION"].initializer.lexeme == "50"
    assert fields["AMPLITUDE"].initializer.lexeme == "175"
    method = next(m for m in wrapper.methods if m.name == "itemActivated")
    assert isinstance(method.body[0], jast.LocalVarDecl)
    assert isinstance(method.body[1], jast.If)


def test_opaque_statement_roundtrip():
    text = "class A { synchronized void weird() { assert x; } }"
    unit = jast.parse(text)
    assert jast.print_unit(unit) == text
    # the member itself is outside the subset, preserved opaquely via text


def test_opaque_in_body():
    text = "class A { void m() { while (x) { a.f(); } } }"
    unit = jast.parse(text)
    (stmt,) = unit.types[0].methods[0].body
    assert isinstance(stmt, jast.OpaqueStmt)
    assert stmt.text == "while (x) { a.f(); }"
    assert jast.print_unit(unit) == text


@pytest.mark.parametrize("path", corpus_java_files(), ids=lambda p: p.name)
def test_roundtrip_corpus(path):
    text = read(path)
    assert jast.print_unit(jast.parse(text)) == text


def test_unbalanced_raises():
    with pytest.raises(jast.UnbalancedSource):
        jast.parse("class A { void m() { ")
    with pytest.raises(jast.UnbalancedSource):
        jast.parse("class A } {")


def test_balanced_despite_literals():
    text = 'class A { void m() { String s = "}}}((("; } }'
    assert jast.print_unit(jast.parse(text)) == text


def test_splice_no_edits(vibrate_example):
    unit = jast.parse(vibrate_example)
    assert jast.splice(unit, []) == vibrate_example


def test_splice_two_disjoint_edits_match_sequential_oracle():
    text = "class A { void m() { a.f(); b.g(); } }"
    unit = jast.parse(text)
    stmts = unit.types[0].methods[0].body
    edits = [(stmts[0].span, "x.h();"), (stmts[1].span, "y.k();")]
    # naive oracle: apply one at a time, later edit first so offsets hold
    oracle = text[:stmts[1].span.start] + "y.k();" + text[stmts[1].span.end:]
    oracle = oracle[:stmts[0].span.start] + "x.h();" + oracle[stmts[0].span.end:]
    assert jast.splice(unit, edits) == oracle
    assert jast.splice(unit, list(reversed(edits))) == oracle


def test_splice_overlap_rejected():
    unit = jast.parse("class A { void m() { a.f(); } }")
    (stmt,) = unit.types[0].methods[0].body
    overlapping = [(stmt.span, "x;"), (jast.Span(stmt.span.start + 1, stmt.span.end), "y;")]
    with pytest.raises(jast.OverlappingEdits):
        jast.splice(unit, overlapping)


def test_splice_insert_only_touches_inserted_region():
    text = "class A {\n    void m() {\n        a.f();\n    }\n}\n"
    unit = jast.parse(text)
    (stmt,) = unit.types[0].methods[0].body
    inserted = "if (x) {\n            b.g();\n        } else {\n            a.f();\n        }"
    out = jast.splice(unit, [(stmt.span, inserted)])
    assert out.startswith(text[:stmt.span.start])
    assert out.endswith(text[stmt.span.end:])
    assert inserted in out


@pytest.mark.parametrize("path", corpus_java_files(), ids=lambda p: p.name)
def test_span_order_monotone(path):
    unit = jast.parse(read(path))
    for tdecl, _ in jast.iter_types(unit):
        for m in tdecl.methods:
            starts = [s.span.start for s, _ in jast.iter_statements(m.body)]
            siblings = [s.span for s in m.body]
            for a, b in zip(siblings, siblings[1:]):
                assert a.end <= b.start  # siblings do not overlap
            assert all(st >= m.span.start for st in starts)


def test_newline_style_preserved():
    text = "class A {\r\n    void m() {\r\n        a.f();\r\n    }\r\n}\r\n"
    unit = jast.parse(text)
    assert unit.newline == "\r\n"
    assert jast.print_unit(unit) == text


def test_render_stmt_synthesized():
    stmt = jast.If(jast.parse_expr_text("x > 0"),
                   jast.Block([jast.ExprStmt(jast.parse_expr_text("a.f()"))]),
                   jast.Block([jast.ExprStmt(jast.parse_expr_text("a.g()"))]))
    rendered = jast.render_stmt(stmt)
    assert rendered.splitlines() == [
        "if (x > 0) {",
        "    a.f();",
        "} else {",
        "    a.g();",
        "}",
    ]


def test_else_keyword_on_own_line_after_apply():
    # the renderer's if/else convention places "} else {" on its own line
    stmt = jast.parse_stmt_text("if (a) { x.f(); } else { x.g(); }")
    assert "} else {" in jast.render_stmt(stmt).splitlines()
