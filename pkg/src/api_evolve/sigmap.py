"""API signatures of the form fqcn#name(paramTypes) and call-site lookup."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from . import jast


class MalformedSignature(Exception):
    """Signature text does not match fqcn#name(type, ...)."""


@dataclass(frozen=True)
class ApiSignature:
    class_name: str
    method_name: str
    param_types: tuple

    @property
    def arity(self) -> int:
        return len(self.param_types)

    def __str__(self) -> str:
        return "%s#%s(%s)" % (self.class_name, self.method_name,
                              ", ".join(self.param_types))


@dataclass(frozen=True)
class ApiMapping:
    deprecated: ApiSignature
    replacement: ApiSignature

    def __post_init__(self):
        if self.deprecated == self.replacement:
            raise MalformedSignature("deprecated and replacement signatures are identical")


@dataclass
class CallSite:
    call: jast.MethodCall
    enclosing_stmt: Optional[jast.Stmt]  # None when the call sits in a field initializer
    enclosing_method: Optional[jast.MethodDecl]
    enclosing_type: jast.TypeDecl
    stmt_chain: tuple = ()  # enclosing statements, outermost first, excluding enclosing_stmt
    field: Optional[jast.FieldDecl] = None


_SIG_RE = re.compile(
    r"^\s*([A-Za-z_$][\w$]*(?:\.[A-Za-z_$][\w$]*)*)"
    r"#([A-Za-z_$][\w$]*)"
    r"\(([^)]*)\)\s*$")


def parse_signature(text: str) -> ApiSignature:
    m = _SIG_RE.match(text)
    if not m:
        raise MalformedSignature("malformed API signature: %r" % text)
    params = m.group(3).strip()
    types = tuple(p.strip() for p in params.split(",")) if params else ()
    if any(not t for t in types):
        raise MalformedSignature("empty parameter type in signature: %r" % text)
    return ApiSignature(m.group(1), m.group(2), types)


def simple_name(qualified: str) -> str:
    return qualified.rsplit(".", 1)[-1]


def find_invocations(unit: jast.CompilationUnit, sig: ApiSignature) -> list:
    """Every MethodCall matching sig's name and arity, in source order.

    Matching is name + arity only; receivers are captured, not typed.
    """
    sites = []
    for tdecl, _outer in jast.iter_types(unit):
        for fdecl in tdecl.fields:
            if fdecl.initializer is None:
                continue
            for e in jast.iter_exprs(fdecl.initializer):
                if _matches(e, sig):
                    sites.append(CallSite(e, None, None, tdecl, field=fdecl))
        for mdecl in tdecl.methods:
            for stmt, chain in jast.iter_statements(mdecl.body):
                for root in jast.stmt_exprs(stmt):
                    for e in jast.iter_exprs(root):
                        if _matches(e, sig):
                            sites.append(CallSite(e, stmt, mdecl, tdecl,
                                                  stmt_chain=chain))
    sites.sort(key=lambda s: s.call.span.start)
    return sites


def _matches(e, sig: ApiSignature) -> bool:
    return (isinstance(e, jast.MethodCall)
            and e.name == sig.method_name
            and len(e.args) == sig.arity)
