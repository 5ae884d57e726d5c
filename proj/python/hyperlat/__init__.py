"""Exact arithmetic for hyperbolic lattices.

Thin dict-level wrapper over the compiled JSON-string interface. Inputs and
outputs are plain Python dicts/lists mirroring the CLI wire formats; large
integers may arrive as decimal strings and are accepted back in that form.
"""

import json as _json

try:
    from . import _hyperlat as _core
except ImportError:  # running against a build tree, module not packaged yet
    import _hyperlat as _core

__version__ = _core.__version__


def _loads(s):
    return _json.loads(s)


def signature(lattice):
    return _loads(_core.signature(_json.dumps(lattice)))


def charpoly(matrix):
    return _loads(_core.charpoly(_json.dumps(matrix)))


def cyclotomic(n):
    return _loads(_core.cyclotomic(n))


def is_salem(poly):
    return _loads(_core.is_salem(_json.dumps(poly)))


def strip_cyclotomic(poly):
    return _loads(_core.strip_cyclotomic(_json.dumps(poly)))


def salem_degree(lattice, isometry):
    return _loads(_core.salem_degree(_json.dumps(lattice), _json.dumps(isometry)))


def order_mod(matrix, modulus, cap=1000000):
    return _core.order_mod(_json.dumps(matrix), str(modulus), cap)


def roots_with_pairing(lattice, vector, pairing):
    return _loads(
        _core.roots_with_pairing(_json.dumps(lattice), _json.dumps(vector), str(pairing))
    )


def chamber_walk(lattice, from_vec, to_vec, cap=10000):
    return _loads(
        _core.chamber_walk(_json.dumps(lattice), _json.dumps(from_vec), _json.dumps(to_vec), cap)
    )


def transfer(lattice, isometry, embedding, ample=None, cap_order=1000000, cap_walk=10000,
             require_chamber=True):
    ample_arg = _json.dumps(ample) if ample is not None else None
    return _loads(
        _core.transfer(
            _json.dumps(lattice),
            _json.dumps(isometry),
            _json.dumps(embedding),
            ample_arg,
            cap_order,
            cap_walk,
            require_chamber,
        )
    )


def verify_certificate(cert):
    return _loads(_core.verify_certificate(_json.dumps(cert)))
