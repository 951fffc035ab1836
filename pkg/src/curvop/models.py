"""Model curvature tensors and the model-spec mini-language.

Closed-form constructors (space forms, Riemannian products, complex space
forms, the explicit Fubini-Study CP^2 table), seeded random tensors, and
linear interpolation between models. ``parse_model`` understands a small
spec grammar used by the command line and the harness:

    sphere:n=4,k=1
    flat:n=3
    cp2
    csf:m=3,c=4
    random:n=5,seed=7,scale=1
    product:(sphere:n=3,k=1)x(flat:n=1)
    interp:(cp2)x(sphere:n=4,k=1),t=0.25

Product and interpolation take exactly two parenthesized children;
interpolation adds the blend parameter t in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    DimensionTooSmall,
    ParameterOutOfRange,
    ParseError,
)
from .tensor import (
    CurvatureTensor,
    ToleranceConfig,
    _exact_symmetrize,
    bianchi_project,
    new_from_components,
)


def constant_curvature(n: int, kappa: float) -> CurvatureTensor:
    """Space form of sectional curvature kappa in dimension n.

    R_ijkl = kappa (delta_ik delta_jl - delta_il delta_jk); every 2-plane
    has sectional curvature kappa, and the unit round sphere is kappa = 1.
    Dimension 1 is allowed and is trivially flat (it gives the line factor
    in products such as sphere x line).
    """
    if n < 1:
        raise DimensionTooSmall(f"need dimension >= 1, got {n}")
    eye = np.eye(n)
    a = kappa * (np.einsum("ik,jl->ijkl", eye, eye) - np.einsum("il,jk->ijkl", eye, eye))
    return CurvatureTensor(n, _exact_symmetrize(a), validate=False)


def flat(n: int) -> CurvatureTensor:
    """The zero curvature tensor in dimension n."""
    return constant_curvature(n, 0.0)


def product(t1: CurvatureTensor, t2: CurvatureTensor) -> CurvatureTensor:
    """Curvature tensor of a Riemannian product.

    Each factor's components embed into its own index block; every mixed
    component vanishes. Dimensions add.
    """
    n1, n2 = t1.dim, t2.dim
    n = n1 + n2
    a = np.zeros((n, n, n, n))
    a[:n1, :n1, :n1, :n1] = t1.array
    a[n1:, n1:, n1:, n1:] = t2.array
    return CurvatureTensor(n, _exact_symmetrize(a), validate=False)


def complex_space_form(m: int, c: float) -> CurvatureTensor:
    """Complex space form of complex dimension m, holomorphic curvature c.

    Real dimension n = 2m with the complex structure J pairing
    consecutive coordinates (J e_{2a-1} = e_{2a}):

        R(X,Y,Z,W) = (c/4) [ <X,Z><Y,W> - <X,W><Y,Z>
                             + <JX,Z><JY,W> - <JX,W><JY,Z>
                             + 2 <JX,Y><JZ,W> ].

    c = 4 gives the Fubini-Study metric normalized so CP^1 is the round
    2-sphere of curvature 4.
    """
    if m < 1:
        raise DimensionTooSmall(f"need complex dimension >= 1, got {m}")
    n = 2 * m
    j = np.zeros((n, n))
    for a_idx in range(m):
        j[2 * a_idx + 1, 2 * a_idx] = 1.0
        j[2 * a_idx, 2 * a_idx + 1] = -1.0
    jt = j.T  # jt[i, k] = <J e_i, e_k>
    eye = np.eye(n)
    a = (c / 4.0) * (
        np.einsum("ik,jl->ijkl", eye, eye)
        - np.einsum("il,jk->ijkl", eye, eye)
        + np.einsum("ik,jl->ijkl", jt, jt)
        - np.einsum("il,jk->ijkl", jt, jt)
        + 2.0 * np.einsum("ij,kl->ijkl", jt, jt)
    )
    return CurvatureTensor(n, _exact_symmetrize(a), validate=False)


def cp2_explicit(tol: ToleranceConfig | None = None) -> CurvatureTensor:
    """The Fubini-Study CP^2 tensor from its nine nonzero components.

    In an adapted orthonormal frame (e1, e2 = Je1, e3, e4 = Je3):
    holomorphic planes have sectional curvature 4, totally real planes 1,
    and the off-block components are R_1234 = 2, R_1342 = R_1423 = -1
    (the unique values compatible with the Bianchi identity). Identical
    to ``complex_space_form(2, 4)``.
    """
    entries = [
        (1, 2, 1, 2, 4.0),
        (3, 4, 3, 4, 4.0),
        (1, 3, 1, 3, 1.0),
        (1, 4, 1, 4, 1.0),
        (2, 3, 2, 3, 1.0),
        (2, 4, 2, 4, 1.0),
        (1, 2, 3, 4, 2.0),
        (1, 3, 4, 2, -1.0),
        (1, 4, 2, 3, -1.0),
    ]
    return new_from_components(4, entries, tol=tol)


def random_curvature(n: int, seed=0, scale: float = 1.0) -> CurvatureTensor:
    """Seeded random algebraic curvature tensor.

    Draws a Gaussian symmetric form on the 2-forms (upper triangle drawn,
    then mirrored), scales it, expands to four indices, and projects onto
    the Bianchi subspace. The same (n, seed, scale) always reproduces the
    same tensor, and the output is linear in ``scale`` up to rounding
    (bit-for-bit when the scale is a power of two). ``seed`` may be an
    int or a tuple of ints (hierarchical seeding).
    """
    if n < 2:
        raise DimensionTooSmall(f"need dimension >= 2, got {n}")
    if not scale > 0:
        raise ParameterOutOfRange(f"scale must be positive, got {scale}")
    rng = np.random.default_rng(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    g = rng.standard_normal((m, m))
    form = np.triu(g) + np.triu(g, 1).T
    form = form * scale
    a = np.zeros((n, n, n, n))
    for p, (i, jj) in enumerate(pairs):
        for q, (k, l) in enumerate(pairs):
            v = form[p, q]
            a[i, jj, k, l] = v
            a[jj, i, k, l] = -v
            a[i, jj, l, k] = -v
            a[jj, i, l, k] = v
    return bianchi_project(a)


def interpolate(t1: CurvatureTensor, t2: CurvatureTensor, t: float) -> CurvatureTensor:
    """Linear blend (1-t) T1 + t T2 of two tensors of equal dimension."""
    if t1.dim != t2.dim:
        raise DimensionMismatch(f"cannot blend dimensions {t1.dim} and {t2.dim}")
    if not 0.0 <= t <= 1.0:
        raise ParameterOutOfRange(f"blend parameter must lie in [0, 1], got {t}")
    a = (1.0 - t) * t1.array + t * t2.array
    return CurvatureTensor(t1.dim, _exact_symmetrize(a), validate=False)


def shift(t1: CurvatureTensor, t2: CurvatureTensor, amount: float) -> CurvatureTensor:
    """The combination T1 + amount * T2 (used for hypothesis boosting)."""
    if t1.dim != t2.dim:
        raise DimensionMismatch(f"cannot combine dimensions {t1.dim} and {t2.dim}")
    a = t1.array + amount * t2.array
    return CurvatureTensor(t1.dim, _exact_symmetrize(a), validate=False)


@dataclass(frozen=True)
class ModelSpec:
    """Parsed model description: a kind, parameters, and child specs."""

    kind: str
    params: dict = field(default_factory=dict)
    children: tuple = ()

    def describe(self) -> str:
        if self.children:
            inner = "x".join(f"({c.describe()})" for c in self.children)
            extra = "".join(f",{k}={v}" for k, v in self.params.items())
            return f"{self.kind}:{inner}{extra}"
        if not self.params:
            return self.kind
        body = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.kind}:{body}"


_ATOM_KINDS = {
    "sphere": {"n": int, "k": float},
    "flat": {"n": int},
    "cp2": {},
    "csf": {"m": int, "c": float},
    "random": {"n": int, "seed": int, "scale": float},
}
_COMBINER_KINDS = {"product": {}, "interp": {"t": float}}


def _split_params(body: str) -> dict[str, str]:
    out: dict[str, str] = {}
    if not body:
        return out
    for piece in body.split(","):
        if "=" not in piece:
            raise ParseError(f"expected key=value, got {piece!r}")
        key, _, value = piece.partition("=")
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise ParseError(f"expected key=value, got {piece!r}")
        if key in out:
            raise ParseError(f"duplicate parameter {key!r}")
        out[key] = value
    return out


def _coerce(kind: str, raw: dict[str, str], schema: dict) -> dict:
    params = {}
    for key, value in raw.items():
        if key not in schema:
            raise ParseError(f"model kind {kind!r} does not take parameter {key!r}")
        caster = schema[key]
        try:
            params[key] = caster(value)
        except ValueError as exc:
            raise ParseError(f"bad value for {kind}.{key}: {value!r}") from exc
    return params


def _split_children(body: str) -> tuple[list[str], str]:
    """Split "(A)x(B),rest" into (["A", "B"], "rest")."""
    children = []
    pos = 0
    while pos < len(body) and body[pos] == "(":
        depth = 0
        for end in range(pos, len(body)):
            if body[end] == "(":
                depth += 1
            elif body[end] == ")":
                depth -= 1
                if depth == 0:
                    break
        else:
            raise ParseError(f"unbalanced parentheses in {body!r}")
        children.append(body[pos + 1 : end])
        pos = end + 1
        if pos < len(body) and body[pos] == "x":
            pos += 1
        else:
            break
    rest = body[pos:]
    if rest.startswith(","):
        rest = rest[1:]
    elif rest:
        raise ParseError(f"unexpected text after children: {rest!r}")
    return children, rest


def parse_model(text: str) -> ModelSpec:
    """Parse a model-spec string into a ModelSpec tree."""
    text = text.strip()
    if not text:
        raise ParseError("empty model spec")
    kind, sep, body = text.partition(":")
    kind = kind.strip()
    if kind in _ATOM_KINDS:
        raw = _split_params(body.strip()) if sep else {}
        return ModelSpec(kind, _coerce(kind, raw, _ATOM_KINDS[kind]))
    if kind in _COMBINER_KINDS:
        if not sep:
            raise ParseError(f"{kind} needs two parenthesized children")
        children_raw, rest = _split_children(body.strip())
        if len(children_raw) != 2:
            raise ParseError(f"{kind} takes exactly two children, got {len(children_raw)}")
        params = _coerce(kind, _split_params(rest), _COMBINER_KINDS[kind])
        children = tuple(parse_model(c) for c in children_raw)
        return ModelSpec(kind, params, children)
    raise ParseError(f"unknown model kind {kind!r}")


def build_model(spec) -> CurvatureTensor:
    """Construct the tensor a ModelSpec (or spec string) describes."""
    if isinstance(spec, str):
        spec = parse_model(spec)
    kind, params = spec.kind, spec.params
    if kind == "sphere":
        if "n" not in params:
            raise ParseError("sphere needs n")
        return constant_curvature(params["n"], params.get("k", 1.0))
    if kind == "flat":
        if "n" not in params:
            raise ParseError("flat needs n")
        return flat(params["n"])
    if kind == "cp2":
        return cp2_explicit()
    if kind == "csf":
        if "m" not in params:
            raise ParseError("csf needs m")
        return complex_space_form(params["m"], params.get("c", 4.0))
    if kind == "random":
        if "n" not in params:
            raise ParseError("random needs n")
        return random_curvature(params["n"], params.get("seed", 0), params.get("scale", 1.0))
    if kind == "product":
        left, right = (build_model(c) for c in spec.children)
        return product(left, right)
    if kind == "interp":
        if "t" not in params:
            raise ParseError("interp needs t")
        left, right = (build_model(c) for c in spec.children)
        return interpolate(left, right, params["t"])
    raise ParseError(f"unknown model kind {kind!r}")
