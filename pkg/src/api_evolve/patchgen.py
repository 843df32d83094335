"""Semantic-patch synthesis from an after-update example, plus the patch
file format (.cocci) reader/writer.

A generated patch abstracts the deprecated call into a context pattern
with metavariables, and carries the guarded replacement block as Add
lines. Helper definitions the replacement needs are serialized verbatim
in a trailing @needs@ section so application never touches the example.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from . import dataflow, jast, normal, sigmap


class ExampleShapeError(Exception):
    """The example lacks the expected if/else deprecated/updated API pair."""


class ResolutionError(Exception):
    """An updated-call argument could not be resolved to a ground value."""


class MalformedPatch(Exception):
    def __init__(self, message: str, line: int = 0):
        super().__init__("line %d: %s" % (line, message) if line else message)
        self.line = line


CONTEXT = "Context"
ADD = "Add"
REMOVE = "Remove"
ELLIPSIS = "Ellipsis"


@dataclass
class PatchLine:
    kind: str
    text: str = ""  # line content without the +/- prefix


@dataclass
class SemanticPatch:
    rule_name: str
    metavars: list  # of (kind, name), kind in {expression, identifier}
    guard_cond: jast.Expr
    hunk: list  # of PatchLine
    needs_imports: list = field(default_factory=list)
    needs_defs: list = field(default_factory=list)  # verbatim member texts
    # derived patterns for the engine
    context: Optional[jast.Stmt] = None
    then_stmts: list = field(default_factory=list)

    def metavar_names(self, kind: str) -> set:
        return {n for k, n in self.metavars if k == kind}

    def __eq__(self, other):
        return isinstance(other, SemanticPatch) and render_patch(self) == render_patch(other)


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

def generate_patch(example: jast.CompilationUnit, mapping: sigmap.ApiMapping,
                   rewire_shared_args: bool = False) -> SemanticPatch:
    dep_site, upd_site, if_stmt = _locate_pair(example, mapping)

    # metavariable slot per deprecated argument position
    shared = {}  # example variable name -> iden metavar name
    for i, arg in enumerate(dep_site.call.args):
        if isinstance(arg, jast.Name):
            shared[arg.identifier] = "iden%d" % i

    pinned = {name: jast.Name(mv) for name, mv in shared.items()} if rewire_shared_args else {}
    ctx = dataflow.context_for_site(upd_site, example)
    ctx.pinned = pinned

    resolved = {}  # updated arg index -> ResolvedValue, for non-shared args
    for j, arg in enumerate(upd_site.call.args):
        if isinstance(arg, jast.Name) and arg.identifier in shared:
            continue
        rv = dataflow.resolve_expression(arg, ctx)
        if rv.kind == dataflow.UNRESOLVED:
            raise ResolutionError(
                "cannot resolve updated-call argument %r" % jast.render_expr(rv.expr))
        resolved[j] = rv

    needs = []
    for rv in resolved.values():
        for d in dataflow.collect_dependencies(rv, example):
            if not any(x is d for x in needs):
                needs.append(d)

    # normalize the deprecated side, then relocate the pair in the new unit
    dep_sites = sigmap.find_invocations(example, mapping.deprecated)
    unit2, _nmap = normal.normalize(example, dep_sites, mapping)
    dep_site, upd_site, if_stmt = _locate_pair(unit2, mapping)

    used_exp = []
    context_stmt = _abstract_stmt(dep_site, shared_receiver=None, used_exp=used_exp,
                                  args_to=lambda i, a: jast.Name("iden%d" % i))
    dep_receiver = dep_site.call.receiver

    temps = []  # (decl stmt text-level pattern, temp name)
    k = 0

    def upd_arg(j, arg):
        nonlocal k
        if isinstance(arg, jast.Name) and arg.identifier in shared:
            return jast.Name(shared[arg.identifier])
        rv = resolved[j]
        temp = "%s%d" % (normal.PATCH_TEMP_PREFIX, k)
        k += 1
        ptype = sigmap.simple_name(mapping.replacement.param_types[j])
        temps.append(jast.LocalVarDecl(ptype, temp, rv.expr))
        return jast.Name(temp)

    updated_stmt = _abstract_stmt(upd_site, shared_receiver=dep_receiver,
                                  used_exp=used_exp, args_to=upd_arg)

    guard = if_stmt.cond
    metavars = _declared_metavars(context_stmt, updated_stmt, used_exp)

    then_stmts = temps + [updated_stmt]
    hunk = [PatchLine(ELLIPSIS)]
    hunk.append(PatchLine(ADD, "if (%s) {" % jast.render_expr(guard)))
    for s in then_stmts:
        hunk.append(PatchLine(ADD, jast.render_stmt(s)))
    hunk.append(PatchLine(ADD, "} else {"))
    hunk.append(PatchLine(CONTEXT, jast.render_stmt(context_stmt)))
    hunk.append(PatchLine(ADD, "}"))

    needs_defs = [d.src for d in needs]
    needs_imports = _needed_imports(example, hunk, needs_defs)

    return SemanticPatch(
        rule_name="update_%s" % mapping.deprecated.method_name,
        metavars=metavars, guard_cond=guard, hunk=hunk,
        needs_imports=needs_imports, needs_defs=needs_defs,
        context=context_stmt, then_stmts=then_stmts)


def _locate_pair(unit, mapping):
    """Best (deprecated site, updated site, if stmt) triple in the example.

    When the two signatures share name and arity the calls are textually
    indistinguishable, so candidate pairings are ranked by how well the
    declared types of their arguments agree with the signature parameter
    types."""
    dep_sites = sigmap.find_invocations(unit, mapping.deprecated)
    upd_sites = sigmap.find_invocations(unit, mapping.replacement)
    best = None
    best_score = -1
    for tdecl, _outer in jast.iter_types(unit):
        for mdecl in tdecl.methods:
            for stmt, _chain in jast.iter_statements(mdecl.body):
                if not isinstance(stmt, jast.If) or stmt.else_block is None:
                    continue
                then_span = stmt.then_block.span
                else_span = stmt.else_block.span
                for dep in dep_sites:
                    for upd in upd_sites:
                        if dep.call is upd.call:
                            continue
                        d, u = dep.call.span, upd.call.span
                        if not ((then_span.contains(u) and else_span.contains(d))
                                or (then_span.contains(d) and else_span.contains(u))):
                            continue
                        score = (_arg_type_score(dep, mapping.deprecated, unit)
                                 + _arg_type_score(upd, mapping.replacement, unit))
                        if score > best_score:
                            best, best_score = (dep, upd, stmt), score
    if best is None:
        raise ExampleShapeError(
            "example must pair %s and %s inside one if/else" %
            (mapping.deprecated, mapping.replacement))
    return best


def _arg_type_score(site, sig, unit):
    """Count arguments whose declared type agrees with the signature."""
    score = 0
    for arg, ptype in zip(site.call.args, sig.param_types):
        if not isinstance(arg, jast.Name):
            continue
        declared = _declared_type(site, arg.identifier)
        if declared is not None and sigmap.simple_name(declared) == sigmap.simple_name(ptype):
            score += 1
    return score


def _declared_type(site, name):
    if site.enclosing_method is not None:
        for ptype, pname in site.enclosing_method.params:
            if pname == name:
                return ptype
        for stmt, _chain in jast.iter_statements(site.enclosing_method.body):
            if isinstance(stmt, jast.LocalVarDecl) and stmt.name == name:
                return stmt.type_name
    for f in site.enclosing_type.fields:
        if f.name == name:
            return f.type_name
    return None


def _abstract_stmt(site, shared_receiver, used_exp, args_to):
    """Abstract a call statement into a pattern: receiver -> classIden,
    arguments via args_to, assignment/declaration left side -> exp0."""
    call = site.call
    receiver = call.receiver
    if receiver is None:
        pat_recv = None
    elif isinstance(receiver, jast.Name):
        if shared_receiver is None or (isinstance(shared_receiver, jast.Name)
                                       and shared_receiver.identifier == receiver.identifier):
            pat_recv = jast.Name("classIden")
        else:
            pat_recv = jast.Name(receiver.identifier)
    else:
        raise ExampleShapeError(
            "unsupported receiver %r on example call" % jast.render_expr(receiver))
    pat_call = jast.MethodCall(pat_recv, call.name,
                               [args_to(i, a) for i, a in enumerate(call.args)])

    stmt = site.enclosing_stmt
    if isinstance(stmt, jast.ExprStmt) and stmt.expr is call:
        return jast.ExprStmt(pat_call)
    if isinstance(stmt, jast.ExprStmt) and isinstance(stmt.expr, jast.Assign) \
            and stmt.expr.rhs is call:
        if "exp0" not in used_exp:
            used_exp.append("exp0")
        return jast.ExprStmt(jast.Assign(jast.Name("exp0"), pat_call))
    if isinstance(stmt, jast.LocalVarDecl) and stmt.init is call:
        if "exp0" not in used_exp:
            used_exp.append("exp0")
        return jast.ExprStmt(jast.Assign(jast.Name("exp0"), pat_call))
    if isinstance(stmt, jast.Return) and stmt.value is call:
        return jast.Return(pat_call)
    raise ExampleShapeError(
        "unsupported statement shape around example call: %r" % (stmt.src,))


def _declared_metavars(context_stmt, updated_stmt, used_exp):
    idents = []
    for root in jast.stmt_exprs(context_stmt) + jast.stmt_exprs(updated_stmt):
        for e in jast.iter_exprs(root):
            if isinstance(e, jast.Name):
                if re.match(r"^iden\d+$", e.identifier) or e.identifier == "classIden":
                    if e.identifier not in idents:
                        idents.append(e.identifier)
    idents.sort(key=lambda n: (n == "classIden", n))
    return [("expression", n) for n in used_exp] + [("identifier", n) for n in idents]


def _needed_imports(example, hunk, needs_defs):
    texts = [pl.text for pl in hunk if pl.kind == ADD] + list(needs_defs)
    blob = "\n".join(texts)
    out = []
    for imp in example.imports:
        simple = sigmap.simple_name(imp)
        if simple == "*":
            continue
        if re.search(r"\b%s\b" % re.escape(simple), blob):
            out.append(imp)
    return out


# ---------------------------------------------------------------------------
# Rendering / parsing of the patch format
# ---------------------------------------------------------------------------

def render_patch(p: SemanticPatch) -> str:
    lines = ["@%s@" % p.rule_name]
    for kind in ("expression", "identifier"):
        names = [n for k, n in p.metavars if k == kind]
        if names:
            lines.append("%s %s;" % (kind, ", ".join(names)))
    lines.append("@@")
    for pl in p.hunk:
        if pl.kind == ELLIPSIS:
            lines.append("...")
        elif pl.kind == ADD:
            lines.append("+ %s" % pl.text)
        elif pl.kind == REMOVE:
            lines.append("- %s" % pl.text)
        else:
            lines.append(pl.text)
    if p.needs_imports or p.needs_defs:
        lines.append("@needs@")
        for imp in p.needs_imports:
            lines.append("import %s;" % imp)
        for d in p.needs_defs:
            lines.append("")
            lines.append(d)
    return "\n".join(lines) + "\n"


def parse_patch(text: str) -> SemanticPatch:
    lines = text.splitlines()
    if not lines or not re.match(r"^@[\w]+@$", lines[0].strip()):
        raise MalformedPatch("expected @rulename@ header", 1)
    rule_name = lines[0].strip().strip("@")

    metavars = []
    i = 1
    while i < len(lines) and lines[i].strip() != "@@":
        m = re.match(r"^\s*(expression|identifier)\s+(.+);\s*$", lines[i])
        if not m:
            raise MalformedPatch("expected metavariable declaration or @@", i + 1)
        for name in m.group(2).split(","):
            name = name.strip()
            if not re.match(r"^[A-Za-z_$][\w$]*$", name):
                raise MalformedPatch("bad metavariable name %r" % name, i + 1)
            metavars.append((m.group(1), name))
        i += 1
    if i >= len(lines):
        raise MalformedPatch("missing @@ separator", len(lines))
    i += 1

    hunk = []
    hunk_start = i + 1
    while i < len(lines) and lines[i].strip() != "@needs@":
        raw = lines[i].strip()
        if raw == "":
            i += 1
            continue
        if raw == "...":
            hunk.append(PatchLine(ELLIPSIS))
        elif raw.startswith("+"):
            hunk.append(PatchLine(ADD, raw[1:].strip()))
        elif raw.startswith("-"):
            hunk.append(PatchLine(REMOVE, raw[1:].strip()))
        else:
            hunk.append(PatchLine(CONTEXT, raw))
        i += 1

    needs_imports, needs_defs = [], []
    if i < len(lines):  # @needs@ section
        rest = lines[i + 1:]
        body = []
        for ln in rest:
            m = re.match(r"^\s*import\s+([\w.]+)\s*;\s*$", ln)
            if m and not body:
                needs_imports.append(m.group(1))
            else:
                body.append(ln)
        blob = "\n".join(body).strip("\n")
        if blob.strip():
            needs_defs = _split_defs(blob)

    if not any(pl.kind in (ADD, CONTEXT) for pl in hunk):
        raise MalformedPatch("empty hunk", hunk_start)

    guard, then_stmts, context = _derive_shape(hunk, hunk_start)
    return SemanticPatch(rule_name=rule_name, metavars=metavars, guard_cond=guard,
                         hunk=hunk, needs_imports=needs_imports,
                         needs_defs=needs_defs, context=context,
                         then_stmts=then_stmts)


def _split_defs(blob: str) -> list:
    try:
        unit = jast.parse(blob)
    except jast.UnbalancedSource as exc:
        raise MalformedPatch("unparsable @needs@ section: %s" % exc)
    defs = []
    for tdecl in unit.types:
        if tdecl.implicit:
            defs.extend(m.src for m in tdecl.methods if not m.implicit)
        else:
            defs.append(tdecl.src)
    return defs


def _derive_shape(hunk, hunk_start):
    """Recover (guard, then statement patterns, context pattern) from the
    generated hunk layout."""
    stmt_lines = [(idx, pl) for idx, pl in enumerate(hunk) if pl.kind in (ADD, CONTEXT)]
    lineno = hunk_start
    if not stmt_lines:
        raise MalformedPatch("empty hunk", hunk_start)
    first = stmt_lines[0][1]
    m = re.match(r"^if\s*\((.*)\)\s*\{$", first.text)
    if first.kind != ADD or not m:
        raise MalformedPatch("hunk must open with '+ if (<guard>) {'", hunk_start)
    try:
        guard = jast.parse_expr_text(m.group(1))
    except Exception:
        raise MalformedPatch("unparsable guard condition %r" % m.group(1), hunk_start)

    then_stmts, context = [], None
    seen_else = False
    for idx, pl in stmt_lines[1:]:
        text = pl.text
        if pl.kind == ADD and text == "} else {":
            seen_else = True
            continue
        if pl.kind == ADD and text == "}":
            continue
        if pl.kind == REMOVE:
            continue
        try:
            stmt = jast.parse_stmt_text(text)
        except Exception:
            raise MalformedPatch("unparsable pattern line %r" % text, lineno + idx)
        if pl.kind == CONTEXT:
            if context is not None:
                raise MalformedPatch("multiple context lines", lineno + idx)
            context = stmt
        elif not seen_else:
            then_stmts.append(stmt)
    if context is None:
        raise MalformedPatch("missing context line", hunk_start)
    if not seen_else:
        raise MalformedPatch("missing '+ } else {' line", hunk_start)
    return guard, then_stmts, context
