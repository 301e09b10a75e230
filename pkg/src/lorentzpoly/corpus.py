"""Bundled golden polynomial files and their integrity checks.

The corpus holds fixed, hand-entered polynomials used as test anchors
independent of the generators in this package: the fully expanded
normalized Schur polynomial of the shape (3,1,1,1,1), the normalized
truncated character of an irreducible sl4 highest-weight module (shipped
as data because general character computation is out of scope here), and
small Schubert-family displays.  ``verify`` re-parses each file and checks
the SHA-256 of its canonical form against the manifest.
"""

import hashlib
import json
from importlib import resources

from .polynomials import Polynomial, format_polynomial, parse_polynomial

_DATA_DIR = "corpus_data"
MANIFEST_NAME = "manifest.json"


def _read_text(name: str, root=None) -> str:
    if root is not None:
        return (root / name).read_text()
    return resources.files("lorentzpoly").joinpath(_DATA_DIR, name).read_text()


def manifest(root=None) -> dict:
    return json.loads(_read_text(MANIFEST_NAME, root))


def names(root=None):
    return sorted(manifest(root)["files"])


def load(name: str, root=None) -> Polynomial:
    """Parse a corpus polynomial by file name (without directory)."""
    return parse_polynomial(_read_text(name, root))


def canonical_sha256(poly: Polynomial) -> str:
    return hashlib.sha256(format_polynomial(poly).encode()).hexdigest()


def verify(root=None):
    """Re-parse every corpus file and compare canonical hashes.

    Returns a list of (name, ok, detail) triples, one per manifest entry.
    """
    results = []
    for name, meta in sorted(manifest(root)["files"].items()):
        try:
            poly = load(name, root)
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            results.append((name, False, f"parse error: {exc}"))
            continue
        digest = canonical_sha256(poly)
        if digest != meta["sha256"]:
            results.append((name, False, f"hash mismatch: {digest}"))
        elif poly.arity != meta["vars"] or len(poly.terms) != meta["terms"]:
            results.append((name, False, "header metadata mismatch"))
        else:
            results.append((name, True, "ok"))
    return results
