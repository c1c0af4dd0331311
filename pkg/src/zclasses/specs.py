"""Text mini-language for describing group constructions.

Grammar (whitespace-insensitive, parameters positional or named)::

    spec := name '(' args ')'
          | 'product(' spec ',' spec ')'
          | 'centralproduct(' spec ',' spec ')'
          | 'file:' path

Examples: ``extraspecial(p=3,n=2,variant=plus)``, ``heisenberg(5)``,
``dihedral(16)``, ``abelian(3,9)``, ``product(heisenberg(3),abelian(3))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import construct
from .core import DEFAULT_ORDER_CAP, GroupTable, center, central_product, direct_product, \
    is_prime, read_cayley_table, validate_group_table
from .errors import BadParameter, SpecSyntaxError, UnknownConstructor

_SIMPLE_KINDS = {
    "abelian": "abelian",
    "cyclic": "cyclic",
    "dihedral": "dihedral",
    "quaternion": "quaternion",
    "heisenberg": "heisenberg",
    "modular_p3": "modular_p3",
    "extraspecial": "extraspecial",
}
_PRODUCT_KINDS = {"product": "direct_product", "centralproduct": "central_product"}


@dataclass
class GroupSpec:
    """Parse tree of one construction expression."""

    kind: str
    args: list = field(default_factory=list)          # positional values
    kwargs: dict = field(default_factory=dict)        # named values
    children: list["GroupSpec"] = field(default_factory=list)
    path: str | None = None                           # cayley_file only

    def text(self) -> str:
        """Canonical form: lowercase, no spaces, positional children."""
        if self.kind == "cayley_file":
            return f"file:{self.path}"
        if self.kind in ("direct_product", "central_product"):
            name = "product" if self.kind == "direct_product" else "centralproduct"
            return f"{name}({self.children[0].text()},{self.children[1].text()})"
        parts = [str(a) for a in self.args]
        parts.extend(f"{k}={v}" for k, v in self.kwargs.items())
        surface = {v: k for k, v in _SIMPLE_KINDS.items()}[self.kind]
        return f"{surface}({','.join(parts)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise SpecSyntaxError(self.pos, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        m = re.match(r"[A-Za-z_][A-Za-z_0-9]*", self.text[self.pos:])
        if not m:
            self.error("expected a constructor name")
        self.pos += m.end()
        return m.group(0).lower()

    def spec(self) -> GroupSpec:
        self.skip_ws()
        if self.text[self.pos:self.pos + 5].lower() == "file:":
            self.pos += 5
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] not in ",)":
                self.pos += 1
            path = self.text[start:self.pos].strip()
            if not path:
                self.error("expected a file path after 'file:'")
            return GroupSpec(kind="cayley_file", path=path)
        name = self.name()
        if name in _PRODUCT_KINDS:
            self.expect("(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return GroupSpec(kind=_PRODUCT_KINDS[name], children=[left, right])
        if name not in _SIMPLE_KINDS:
            raise UnknownConstructor(f"unknown constructor {name!r}")
        self.expect("(")
        args: list = []
        kwargs: dict = {}
        if self.peek() != ")":
            while True:
                args_len = self.pos
                token = self.value_or_pair()
                if isinstance(token, tuple):
                    key, val = token
                    if key in kwargs:
                        self.pos = args_len
                        self.error(f"duplicate parameter {key!r}")
                    kwargs[key] = val
                else:
                    if kwargs:
                        self.pos = args_len
                        self.error("positional parameter after a named one")
                    args.append(token)
                if self.peek() == ",":
                    self.expect(",")
                    continue
                break
        self.expect(")")
        return GroupSpec(kind=_SIMPLE_KINDS[name], args=args, kwargs=kwargs)

    def value_or_pair(self):
        self.skip_ws()
        m = re.match(r"[A-Za-z_][A-Za-z_0-9]*\s*=", self.text[self.pos:])
        if m:
            key = m.group(0)[:-1].strip().lower()
            self.pos += m.end()
            return key, self.value()
        return self.value()

    def value(self):
        self.skip_ws()
        m = re.match(r"-?[0-9]+", self.text[self.pos:])
        if m:
            self.pos += m.end()
            return int(m.group(0))
        m = re.match(r"[A-Za-z_][A-Za-z_0-9]*", self.text[self.pos:])
        if m:
            self.pos += m.end()
            return m.group(0).lower()
        self.error("expected a number or identifier")


def parse_spec(text: str) -> GroupSpec:
    """Parse one construction expression; errors carry the source position."""
    parser = _Parser(text)
    spec = parser.spec()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        parser.error("trailing input after the spec")
    return spec


def _int_param(spec: GroupSpec, name: str, position: int):
    if name in spec.kwargs:
        v = spec.kwargs[name]
    elif position < len(spec.args):
        v = spec.args[position]
    else:
        raise BadParameter(f"{spec.kind}: missing parameter {name!r}")
    if not isinstance(v, int):
        raise BadParameter(f"{spec.kind}: parameter {name!r} must be an integer, got {v!r}")
    return v


def _check_params(spec: GroupSpec, names: list[str]):
    extra = set(spec.kwargs) - set(names)
    if extra:
        raise BadParameter(f"{spec.kind}: unknown parameter(s) {sorted(extra)}")
    if len(spec.args) > len(names):
        raise BadParameter(f"{spec.kind}: expected at most {len(names)} parameters")


def build_group(spec: GroupSpec | str, *, cap: int = DEFAULT_ORDER_CAP,
                exhaustive: bool | None = None, seed: int = 0,
                base_dir=None) -> GroupTable:
    """Construct the group a spec describes; the label is the canonical text.

    ``base_dir`` resolves relative ``file:`` paths (defaults to the working
    directory).  ``exhaustive=True`` forces a full O(n^3) axiom check on the
    result regardless of how it was built.
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    G = _build_from_spec(spec, cap=cap, exhaustive=exhaustive, seed=seed,
                         base_dir=base_dir)
    if exhaustive:
        validate_group_table(G, exhaustive=True, seed=seed)
    return G


def _build_from_spec(spec: GroupSpec, *, cap: int, exhaustive: bool | None,
                     seed: int, base_dir) -> GroupTable:
    kind = spec.kind
    if kind == "cayley_file":
        from pathlib import Path
        path = Path(spec.path)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return read_cayley_table(path, label=spec.text(), exhaustive=exhaustive, seed=seed)
    if kind in ("direct_product", "central_product"):
        left = _build_from_spec(spec.children[0], cap=cap, exhaustive=exhaustive,
                                seed=seed, base_dir=base_dir)
        right = _build_from_spec(spec.children[1], cap=cap, exhaustive=exhaustive,
                                 seed=seed, base_dir=base_dir)
        if kind == "direct_product":
            out = direct_product(left, right, cap=cap)
        else:
            out = central_product(left, right,
                                  *_amalgamation_pair(left, right), cap=cap)
        return out.relabeled(spec.text())
    if kind == "abelian":
        if spec.kwargs:
            raise BadParameter("abelian: parameters are positional orders")
        if not all(isinstance(a, int) for a in spec.args):
            raise BadParameter("abelian: orders must be integers")
        return construct.abelian(spec.args, cap=cap).relabeled(spec.text())
    if kind == "cyclic":
        _check_params(spec, ["n"])
        return construct.cyclic(_int_param(spec, "n", 0)).relabeled(spec.text())
    if kind == "dihedral":
        _check_params(spec, ["order"])
        return construct.dihedral(_int_param(spec, "order", 0)).relabeled(spec.text())
    if kind == "quaternion":
        _check_params(spec, ["order"])
        return construct.quaternion(_int_param(spec, "order", 0)).relabeled(spec.text())
    if kind == "heisenberg":
        _check_params(spec, ["p"])
        return construct.heisenberg(_int_param(spec, "p", 0)).relabeled(spec.text())
    if kind == "modular_p3":
        _check_params(spec, ["p"])
        return construct.modular_p3(_int_param(spec, "p", 0)).relabeled(spec.text())
    if kind == "extraspecial":
        _check_params(spec, ["p", "n", "variant"])
        p = _int_param(spec, "p", 0)
        n = _int_param(spec, "n", 1)
        variant = spec.kwargs.get("variant",
                                  spec.args[2] if len(spec.args) > 2 else "plus")
        if not isinstance(variant, str):
            raise BadParameter(f"extraspecial: variant must be plus/minus, got {variant!r}")
        return construct.extraspecial(p, n, variant, cap=cap).relabeled(spec.text())
    raise UnknownConstructor(f"unknown construction kind {kind!r}")


def _amalgamation_pair(G: GroupTable, H: GroupTable) -> tuple[int, int]:
    """Canonical central elements for the spec form of a central product:
    the smallest central elements of the smallest shared prime order."""
    def prime_central(T: GroupTable) -> dict[int, int]:
        out: dict[int, int] = {}
        for z in center(T).members():
            if z == 0:
                continue
            o = T.element_order(int(z))
            if is_prime(o) and o not in out:
                out[o] = int(z)
        return out

    cg, ch = prime_central(G), prime_central(H)
    shared = sorted(set(cg) & set(ch))
    if not shared:
        raise BadParameter("centralproduct: factors share no central prime order")
    p = shared[0]
    return cg[p], ch[p]
