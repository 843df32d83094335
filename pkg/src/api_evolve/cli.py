"""Command-line driver.

Two modes mirroring the tool's published interface:

  api-evolve --generate-patch <deprecated_sig> <updated_sig> \\
      --input example.java --output update.cocci

  api-evolve --apply-patch <deprecated_sig> <updated_sig> \\
      --input target.java --patch update.cocci --output target_updated.java

Exit codes: 0 success; 1 nothing to update; 2 source parse failure;
3 patch/example problem; 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import dataflow, engine, jast, normal, patchgen, sigmap

EXIT_OK = 0
EXIT_NO_SITES = 1
EXIT_PARSE = 2
EXIT_BAD_INPUT = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="api-evolve",
                description="Synthesize and apply deprecated-API update patches.")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--generate-patch", action="store_true",
                      help="create an update patch from an after-update example")
    mode.add_argument("--apply-patch", action="store_true",
                      help="apply a previously created update patch to a target file")
    p.add_argument("deprecated", help="deprecated API signature, fqcn#name(types)")
    p.add_argument("updated", help="replacement API signature, fqcn#name(types)")
    p.add_argument("--input", required=True,
                   help="example file (generate) or target file (apply)")
    p.add_argument("--output", required=True, help="path for the produced file")
    p.add_argument("--patch", help="update patch file (apply mode)")
    p.add_argument("--report", help="write a JSON update report here (apply mode)")
    p.add_argument("--rewire-shared-args", action="store_true",
                   help="substitute target argument metavariables into resolved "
                        "values whose chain passes through a deprecated-call argument")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    if args.apply_patch and not args.patch:
        parser.print_usage(sys.stderr)
        sys.stderr.write("api-evolve: error: --patch is required with --apply-patch\n")
        return EXIT_USAGE

    try:
        mapping = sigmap.ApiMapping(sigmap.parse_signature(args.deprecated),
                                    sigmap.parse_signature(args.updated))
    except sigmap.MalformedSignature as exc:
        sys.stderr.write("api-evolve: %s\n" % exc)
        return EXIT_USAGE

    if args.generate_patch:
        return run_generate(args, mapping)
    return run_apply(args, mapping)


def run_generate(args, mapping) -> int:
    try:
        src = jast.parse_file(args.input)
    except OSError as exc:
        sys.stderr.write("api-evolve: cannot read %s: %s\n" % (args.input, exc))
        return EXIT_PARSE
    except jast.UnbalancedSource as exc:
        sys.stderr.write("api-evolve: parse failure in %s: %s\n" % (args.input, exc))
        return EXIT_PARSE
    try:
        patch = patchgen.generate_patch(src.unit, mapping,
                                        rewire_shared_args=args.rewire_shared_args)
    except (patchgen.ExampleShapeError, patchgen.ResolutionError) as exc:
        sys.stderr.write("api-evolve: %s\n" % exc)
        return EXIT_BAD_INPUT
    _atomic_write(args.output, patchgen.render_patch(patch))
    return EXIT_OK


def run_apply(args, mapping) -> int:
    try:
        src = jast.parse_file(args.input)
    except OSError as exc:
        sys.stderr.write("api-evolve: cannot read %s: %s\n" % (args.input, exc))
        return EXIT_PARSE
    except jast.UnbalancedSource as exc:
        sys.stderr.write("api-evolve: parse failure in %s: %s\n" % (args.input, exc))
        return EXIT_PARSE
    try:
        with open(args.patch, "r", encoding="utf-8") as fh:
            patch = patchgen.parse_patch(fh.read())
    except OSError as exc:
        sys.stderr.write("api-evolve: cannot read %s: %s\n" % (args.patch, exc))
        return EXIT_BAD_INPUT
    except patchgen.MalformedPatch as exc:
        sys.stderr.write("api-evolve: malformed patch %s: %s\n" % (args.patch, exc))
        return EXIT_BAD_INPUT

    unit = src.unit
    try:
        unit, nmap = normal.normalize(
            unit, sigmap.find_invocations(unit, mapping.deprecated), mapping)
        unit, copied, renames = engine.transplant_definitions(
            unit, patch.needs_defs, patch.needs_imports)
        unit, report, patch_temps = engine.apply_patch(patch, unit, renames)
        unit = normal.denormalize(unit, nmap, patch_temps)
    except normal.MultipleUse as exc:
        sys.stderr.write("api-evolve: internal temporary misuse: %s\n" % exc)
        return EXIT_BAD_INPUT

    report.file_path = args.input
    report.definitions_copied = copied
    # field-initializer sites are skipped by normalize and re-reported by the
    # engine as NonStatementContext, so nmap.skipped needs no merging here

    if report.sites_updated == 0:
        out_text = src.text  # nothing applied: output mirrors the input
    else:
        out_text = jast.print_unit(unit)
    _atomic_write(args.output, out_text)
    if args.report:
        _atomic_write(args.report,
                      json.dumps(report.to_json_dict(out_text), indent=2) + "\n")
    return EXIT_OK if report.sites_updated >= 1 else EXIT_NO_SITES


def _atomic_write(path: str, content: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".api-evolve-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


if __name__ == "__main__":
    sys.exit(main())
