"""api-evolve: synthesize and apply deprecated-API update patches for
Java-subset sources, from a single after-update example."""

from .jast import (CompilationUnit, SourceFile, UnbalancedSource,  # noqa: F401
                   OverlappingEdits, parse, parse_file, print_unit, splice)
from .sigmap import (ApiMapping, ApiSignature, CallSite,  # noqa: F401
                     MalformedSignature, find_invocations, parse_signature)
from .dataflow import (ResolvedValue, ResolutionContext,  # noqa: F401
                       collect_dependencies, resolve_expression)
from .normal import NormalizationMap, MultipleUse, denormalize, normalize  # noqa: F401
from .patchgen import (ExampleShapeError, MalformedPatch, ResolutionError,  # noqa: F401
                       SemanticPatch, generate_patch, parse_patch, render_patch)
from .engine import (MetaBinding, UpdateReport, already_guarded,  # noqa: F401
                     apply_patch, match_statement, transplant_definitions)
from .harness import run_corpus  # noqa: F401

__version__ = "0.1.0"
