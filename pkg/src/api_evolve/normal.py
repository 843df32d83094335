"""Argument normalization and temporary-variable denormalization.

normalize hoists every non-trivial argument of a deprecated call into a
fresh single-use `normArg<N>` temporary so identifier-metavariable
patterns can match. denormalize inverts that, and also inlines
patch-introduced `newParameterVariable<N>` temporaries, leaving no tool
temporary behind.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from . import jast, sigmap

TARGET_TEMP_PREFIX = "normArg"
PATCH_TEMP_PREFIX = "newParameterVariable"

NON_STATEMENT_CONTEXT = "NonStatementContext"


class MultipleUse(Exception):
    """A tool temporary is used more than once; upstream bug, abort the file."""


@dataclass
class NormalizationMap:
    entries: list = field(default_factory=list)  # of (temp_name, original_src, decl_stmt)
    skipped: list = field(default_factory=list)  # of (Span, reason)

    def temp_names(self) -> list:
        return [name for name, _src, _decl in self.entries]


def normalize(unit: jast.CompilationUnit, sites, mapping: sigmap.ApiMapping):
    """Hoist complex deprecated-call arguments into fresh temporaries.

    Returns (unit', NormalizationMap). Sites whose enclosing context cannot
    legally precede a declaration (field initializers) are skipped and
    recorded.
    """
    nmap = NormalizationMap()
    edits = []
    counter = _fresh_counter(unit.text, TARGET_TEMP_PREFIX)
    planned = []  # (temp_name, original_src)
    for site in sorted(sites, key=lambda s: s.call.span.start):
        if site.enclosing_stmt is None:
            nmap.skipped.append((site.call.span, NON_STATEMENT_CONTEXT))
            continue
        stmt = site.enclosing_stmt
        indent = jast.indent_at(unit.text, stmt.span.start)
        for idx, arg in enumerate(site.call.args):
            if isinstance(arg, jast.Name):
                continue
            temp = "%s%d" % (TARGET_TEMP_PREFIX, next(counter))
            ptype = sigmap.simple_name(mapping.deprecated.param_types[idx])
            decl = "%s %s = %s;%s%s" % (ptype, temp, arg.src, unit.newline, indent)
            edits.append((jast.Span(stmt.span.start, stmt.span.start), decl))
            edits.append((arg.span, temp))
            planned.append((temp, arg.src))
    if not edits:
        return unit, nmap
    unit2 = jast.edited(unit, edits)
    decls = _temp_decls(unit2)
    for temp, src in planned:
        nmap.entries.append((temp, src, decls.get(temp)))
    return unit2, nmap


def denormalize(unit: jast.CompilationUnit, nmap: NormalizationMap,
                patch_temps=()) -> jast.CompilationUnit:
    """Inline every tool temporary back into its single use site and delete
    its declaration. Applied innermost-first so nested temporaries are
    handled in one logical pass."""
    pending = set(nmap.temp_names()) | set(patch_temps)
    while True:
        decls = {name: d for name, d in _temp_decls(unit).items() if name in pending}
        if not decls:
            break
        name = _innermost(decls)
        decl = decls[name]
        uses = _uses_of(unit, name, decl)
        if len(uses) > 1:
            raise MultipleUse("temporary %s used %d times" % (name, len(uses)))
        edits = [(_line_span(unit, decl.span), "")]
        if uses:
            edits.append((uses[0].span, decl.init.src))
        unit = jast.edited(unit, edits)
        pending.discard(name)
    return unit


def purge_ok(text: str, patch_temps=()) -> bool:
    """True when no tool temporary name remains in the text."""
    if re.search(r"\b%s\d+\b" % TARGET_TEMP_PREFIX, text):
        return False
    if re.search(r"\b%s\d+\b" % PATCH_TEMP_PREFIX, text):
        return False
    return all(not re.search(r"\b%s\b" % re.escape(t), text) for t in patch_temps)


def _fresh_counter(text: str, prefix: str):
    used = {int(m) for m in re.findall(r"\b%s(\d+)\b" % prefix, text)}
    n = max(used) + 1 if used else 0

    def gen():
        nonlocal n
        while True:
            yield n
            n += 1
    return gen()


def _temp_decls(unit) -> dict:
    """name -> LocalVarDecl for every tool-temp declaration in the unit."""
    out = {}
    for tdecl, _outer in jast.iter_types(unit):
        for mdecl in tdecl.methods:
            for stmt, _chain in jast.iter_statements(mdecl.body):
                if (isinstance(stmt, jast.LocalVarDecl)
                        and re.match(r"^(%s|%s)\d+$" % (TARGET_TEMP_PREFIX,
                                                        PATCH_TEMP_PREFIX), stmt.name)):
                    out[stmt.name] = stmt
    return out


def _innermost(decls: dict) -> str:
    """A temp whose initializer references no other pending temp."""
    names = set(decls)
    for name, d in sorted(decls.items()):
        init_src = d.init.src if d.init is not None else ""
        if not any(re.search(r"\b%s\b" % other, init_src)
                   for other in names if other != name):
            return name
    raise MultipleUse("cyclic temporary references: %s" % sorted(names))


def _uses_of(unit, name, decl) -> list:
    uses = []
    for tdecl, _outer in jast.iter_types(unit):
        roots = [f.initializer for f in tdecl.fields if f.initializer is not None]
        for mdecl in tdecl.methods:
            for stmt, _chain in jast.iter_statements(mdecl.body):
                if stmt is decl:
                    continue
                roots.extend(jast.stmt_exprs(stmt))
        for root in roots:
            for e in jast.iter_exprs(root):
                if isinstance(e, jast.Name) and e.identifier == name:
                    uses.append(e)
    uses.sort(key=lambda e: e.span.start)
    return uses


def _line_span(unit, span: jast.Span) -> jast.Span:
    """Expand a statement span to its whole line (including the trailing
    newline) when the statement sits alone on the line."""
    text = unit.text
    line_start = text.rfind("\n", 0, span.start) + 1
    nl = text.find("\n", span.end)
    line_end = len(text) if nl < 0 else nl + 1
    if (text[line_start:span.start].strip() == ""
            and text[span.end:line_end].strip() == ""):
        return jast.Span(line_start, line_end)
    return jast.Span(span.start, span.end)
