import pytest

from api_evolve import engine, jast, patchgen, sigmap

from conftest import CORPUS


def load_patch(case, rewire=False):
    root = CORPUS / "cases" / case
    dep, upd = (root / "mapping.txt").read_text().splitlines()
    mapping = sigmap.ApiMapping(sigmap.parse_signature(dep),
                                sigmap.parse_signature(upd))
    example = jast.parse((root / "example.java").read_text())
    return patchgen.generate_patch(example, mapping, rewire_shared_args=rewire), mapping


# -- matching -----------------------------------------------------------------

def match(pattern_text, stmt_text, ident=(), expr=()):
    return engine.match_statement(jast.parse_stmt_text(pattern_text),
                                  jast.parse_stmt_text(stmt_text),
                                  expr_metavars=expr, ident_metavars=ident)


def test_identifier_metavar_binds_name():
    b = match("classIden.vibrate(iden0);", "v.vibrate(d);",
              ident=("classIden", "iden0"))
    assert b is not None
    assert jast.render_expr(b.assignments["classIden"]) == "v"
    assert jast.render_expr(b.assignments["iden0"]) == "d"


def test_identifier_metavar_rejects_compound():
    assert match("classIden.vibrate(iden0);", "v.vibrate(d * 2);",
                 ident=("classIden", "iden0")) is None


def test_expression_metavar_binds_anything():
    b = match("exp0 = classIden.getCurrentMinute();",
              "this.minute = tp.getCurrentMinute();",
              ident=("classIden",), expr=("exp0",))
    assert b is not None
    assert jast.render_expr(b.assignments["exp0"]) == "this.minute"


def test_repeated_metavar_must_agree():
    assert match("f(iden0, iden0);", "f(a, a);", ident=("iden0",)) is not None
    assert match("f(iden0, iden0);", "f(a, b);", ident=("iden0",)) is None


def test_method_name_and_arity_are_rigid():
    assert match("classIden.vibrate(iden0);", "v.buzz(d);",
                 ident=("classIden", "iden0")) is None
    assert match("classIden.vibrate(iden0);", "v.vibrate(d, e);",
                 ident=("classIden", "iden0")) is None


def test_substitution_inverts_match():
    pattern = jast.parse_stmt_text("classIden.vibrate(iden0);")
    concrete = jast.parse_stmt_text("vib.vibrate(dur);")
    b = engine.match_statement(pattern, concrete,
                               ident_metavars=("classIden", "iden0"))
    out = engine.substitute_stmt(pattern, b)
    assert jast.render_stmt(out) == "vib.vibrate(dur);"


def test_substitution_applies_renames():
    pattern = jast.parse_stmt_text("x = makeAttrs(5);")
    b = engine.MetaBinding()
    out = engine.substitute_stmt(pattern, b, renames={"makeAttrs": "makeAttrs_androevolve"})
    assert jast.render_stmt(out) == "x = makeAttrs_androevolve(5);"


# -- guard detection ----------------------------------------------------------

def guarded_site(text, mapping):
    unit = jast.parse(text)
    return sigmap.find_invocations(unit, mapping.deprecated)


def test_already_guarded(minute_mapping):
    sites = guarded_site(
        "class A { void m(TimePicker tp) {\n"
        "    if (android.os.Build.VERSION.SDK_INT >= 23) {\n"
        "        x = tp.getMinute();\n"
        "    } else {\n"
        "        x = tp.getCurrentMinute();\n"
        "    }\n"
        "} }", minute_mapping)
    assert all(engine.already_guarded(s) for s in sites)


def test_unrelated_condition_not_guarded(minute_mapping):
    sites = guarded_site(
        "class A { void m(TimePicker tp) {\n"
        "    if (live) { x = tp.getCurrentMinute(); }\n"
        "} }", minute_mapping)
    assert not any(engine.already_guarded(s) for s in sites)


# -- application --------------------------------------------------------------

def test_apply_reports_and_guards():
    patch, _ = load_patch("vibrate")
    unit = jast.parse(
        "class A {\n"
        "    void m(Vibrator v, long d) {\n"
        "        v.vibrate(d);\n"
        "    }\n"
        "}\n")
    out, report, temps = engine.apply_patch(patch, unit)
    text = jast.print_unit(out)
    assert report.sites_found == 1 and report.sites_updated == 1
    assert "if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {" in text
    assert "} else {" in text
    assert "v.vibrate(d);" in text  # original call preserved in else branch
    assert "VibrationEffect.createOneShot(50, 175)" in text
    assert temps and all(t.startswith("newParameterVariable") for t in temps)


def test_apply_fresh_temp_per_site():
    patch, _ = load_patch("vibrate")
    unit = jast.parse(
        "class A {\n"
        "    void m(Vibrator v, long a, long b) {\n"
        "        v.vibrate(a);\n"
        "        v.vibrate(b);\n"
        "    }\n"
        "}\n")
    out, report, temps = engine.apply_patch(patch, unit)
    assert report.sites_updated == 2
    assert len(set(temps)) == 2


def test_apply_skips_guarded_site():
    patch, _ = load_patch("vibrate")
    unit = jast.parse(
        "class A {\n"
        "    void m(Vibrator v, long d) {\n"
        "        if (android.os.Build.VERSION.SDK_INT >= 26) {\n"
        "            v.vibrate(d);\n"
        "        }\n"
        "    }\n"
        "}\n")
    before = jast.print_unit(unit)
    out, report, _ = engine.apply_patch(patch, unit)
    assert jast.print_unit(out) == before
    assert report.sites_updated == 0
    assert [r for _, r in report.sites_skipped] == [engine.ALREADY_GUARDED]


def test_apply_is_idempotent():
    patch, _ = load_patch("vibrate")
    unit = jast.parse(
        "class A {\n"
        "    void m(Vibrator v, long d) {\n"
        "        v.vibrate(d);\n"
        "    }\n"
        "}\n")
    once, _, _ = engine.apply_patch(patch, unit)
    twice, report, _ = engine.apply_patch(patch, jast.parse(jast.print_unit(once)))
    assert jast.print_unit(twice) == jast.print_unit(once)
    assert report.sites_updated == 0


def test_apply_only_touches_replaced_statement():
    patch, _ = load_patch("vibrate")
    text = ("class A {\n"
            "    // leading comment\n"
            "    void m(Vibrator v, long d) {\n"
            "        before();\n"
            "        v.vibrate(d);\n"
            "        after();  // trailing\n"
            "    }\n"
            "}\n")
    unit = jast.parse(text)
    (site,) = sigmap.find_invocations(
        unit, sigmap.parse_signature("android.os.Vibrator#vibrate(long)"))
    span = site.enclosing_stmt.span
    out, _, _ = engine.apply_patch(patch, unit)
    result = jast.print_unit(out)
    assert result.startswith(text[:span.start])
    assert result.endswith(text[span.end:])


def test_report_json_shape():
    patch, _ = load_patch("vibrate")
    unit = jast.parse("class A { void m(Vibrator v, long d) { v.vibrate(d); } }")
    out, report, _ = engine.apply_patch(patch, unit)
    report.file_path = "A.java"
    d = report.to_json_dict(jast.print_unit(out))
    assert d["file"] == "A.java"
    assert d["sitesFound"] == 1 and d["sitesUpdated"] == 1
    assert d["skipped"] == []


# -- transplantation ----------------------------------------------------------

def test_transplant_appends_method_and_import():
    unit = jast.parse("import a.B;\n\nclass T {\n    void m() { }\n}\n")
    defs = ["static AudioAttributes makeAttrs(int usage) {\n"
            "    return null;\n"
            "}"]
    out, copied, renames = engine.transplant_definitions(
        unit, defs, imports=["android.media.AudioAttributes"])
    text = jast.print_unit(out)
    assert copied == ["makeAttrs"]
    assert renames == {}
    assert "import android.media.AudioAttributes;" in text
    assert text.index("import a.B;") < text.index("import android.media")
    assert "makeAttrs" in text
    jast.parse(text)  # stays well-formed


def test_transplant_reuses_identical_signature():
    unit = jast.parse(
        "class T {\n"
        "    static AudioAttributes makeAttrs(int usage) { return own(usage); }\n"
        "    void m() { }\n"
        "}\n")
    before = jast.print_unit(unit)
    out, copied, renames = engine.transplant_definitions(
        unit, ["static AudioAttributes makeAttrs(int usage) { return null; }"])
    assert jast.print_unit(out) == before
    assert copied == [] and renames == {}


def test_transplant_renames_collision():
    unit = jast.parse(
        "class T {\n"
        "    static int makeAttrs(int a, int b) { return 0; }\n"
        "    void m() { }\n"
        "}\n")
    out, copied, renames = engine.transplant_definitions(
        unit, ["static AudioAttributes makeAttrs(int usage) { return null; }"])
    text = jast.print_unit(out)
    assert renames == {"makeAttrs": "makeAttrs_androevolve"}
    assert "makeAttrs_androevolve(int usage)" in text


def test_transplant_skips_existing_import():
    unit = jast.parse("import android.media.AudioAttributes;\n\nclass T { void m() { } }\n")
    out, _, _ = engine.transplant_definitions(
        unit, [], imports=["android.media.AudioAttributes"])
    assert jast.print_unit(out).count("import android.media.AudioAttributes;") == 1
