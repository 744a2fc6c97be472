"""JSON input documents: loading with validation, and emission from live objects.

Matrices are row-major arrays of strings ``"num/den"``.  Every keyed table is a
list of records so that object tuples survive the round trip.  Errors carry a
JSON pointer to the offending field.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .enriched import EnrichedError, FinVCat, Functor, TableFunctor
from .kernels import Kernel
from .linalg import RationalMatrix
from .promonoidal import Antipode, PromonoidalStructure

MAX_OBJECTS = 8
MAX_HOM = 8
MAX_P = 64
MAX_TRUNCATION = 6
MAX_CARRIER = 12

TOP_KEYS = ("scalar", "categories", "functors", "promonoidal", "antipodes", "kernels", "witnesses",
            "species", "boolean", "meta")


class SpecError(EnrichedError):
    """Malformed input document; ``pointer`` locates the offending field."""

    def __init__(self, kind: str, pointer: str, msg: str):
        super().__init__(f"{kind} error at {pointer or '/'}: {msg}")
        self.kind = kind
        self.pointer = pointer


@dataclass
class SpecDocument:
    categories: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    promonoidal: dict = field(default_factory=dict)
    antipodes: dict = field(default_factory=dict)
    kernels: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    species: dict | None = None         # {"category", "promonoidal", "members": {name: Species}}
    boolean: dict = field(default_factory=dict)   # name -> BoolInstance
    meta: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# scalars, matrices, objects


def fmt_scalar(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def matrix_to_json(m: RationalMatrix) -> list:
    return [[fmt_scalar(Fraction(x)) for x in row] for row in m.to_lists()]


def _esc(part) -> str:
    return str(part).replace("~", "~0").replace("/", "~1")


def _ptr(*parts) -> str:
    return "".join("/" + _esc(p) for p in parts)


def parse_scalar(v, ptr: str) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise SpecError("value", ptr, f"expected an exact rational, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            pass
    raise SpecError("value", ptr, f"not a rational 'num/den': {v!r}")


def parse_matrix(v, rows: int, cols: int, ptr: str, what: str) -> RationalMatrix:
    if not isinstance(v, list) or any(not isinstance(r, list) for r in v):
        raise SpecError("value", ptr, "matrix must be an array of rows")
    if len(v) != rows or any(len(r) != cols for r in v):
        got = (len(v), len(v[0]) if v else 0)
        raise SpecError("shape", ptr, f"{what}: expected {rows}x{cols}, got {got[0]}x{got[1]}")
    if rows == 0 or cols == 0:
        return RationalMatrix.zeros(rows, cols)
    return RationalMatrix.from_rows([[parse_scalar(x, f"{ptr}/{i}/{j}") for j, x in enumerate(r)]
                                     for i, r in enumerate(v)])


def _obj(v):
    return tuple(_obj(x) for x in v) if isinstance(v, list) else v


def _objs(v):
    return [_obj(x) for x in v]


def _need(d: dict, key: str, ptr: str, kind=None):
    if not isinstance(d, dict):
        raise SpecError("value", ptr, "expected an object")
    if key not in d:
        raise SpecError("missing", _ptr_join(ptr, key), f"required field {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise SpecError("value", _ptr_join(ptr, key), f"expected {kind.__name__}")
    return v


def _ptr_join(ptr: str, *parts) -> str:
    return ptr + _ptr(*parts)


# ---------------------------------------------------------------------------
# loading


def load_spec(path) -> SpecDocument:
    raw = Path(path).read_bytes()
    return loads_spec(raw)


def loads_spec(raw: bytes | str) -> SpecDocument:
    text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        offset = len(text[:e.pos].encode("utf-8"))
        raise SpecError("parse", "", f"{e.msg} at byte offset {offset}") from None
    return build_document(data)


class _Loader:
    def __init__(self, data: dict):
        self.data = data
        self.doc = SpecDocument()

    def cat(self, ref, ptr) -> FinVCat:
        if not isinstance(ref, str):
            raise SpecError("value", ptr, "category reference must be a string")
        name, op = (ref[:-3], True) if ref.endswith("^op") else (ref, False)
        c = self.doc.categories.get(name)
        if c is None:
            raise SpecError("reference", ptr, f"unknown category {name!r}")
        return c.op() if op else c

    def functor(self, ref, ptr) -> Functor:
        f = self.doc.functors.get(ref)
        if f is None:
            raise SpecError("reference", ptr, f"unknown functor {ref!r}")
        return f

    def structure(self, ref, ptr) -> PromonoidalStructure | None:
        if ref is None:
            return None
        ps = self.doc.promonoidal.get(ref)
        if ps is None:
            raise SpecError("reference", ptr, f"unknown promonoidal structure {ref!r}")
        return ps

    def check_obj(self, c: FinVCat, o, ptr):
        if o not in c.objects:
            raise SpecError("reference", ptr, f"{o!r} is not an object of {c.name}")

    # -- sections --

    def categories(self, sec: dict):
        for name, d in sec.items():
            p = _ptr("categories", name)
            objs = _objs(_need(d, "objects", p, list))
            if len(objs) > MAX_OBJECTS:
                raise SpecError("size", _ptr_join(p, "objects"), f"{len(objs)} objects exceed the cap {MAX_OBJECTS}")
            if len(set(objs)) != len(objs):
                raise SpecError("value", _ptr_join(p, "objects"), "duplicate objects")
            oset = set(objs)

            def ob(v, q):
                v = _obj(v)
                if v not in oset:
                    raise SpecError("reference", q, f"{v!r} is not an object of {name}")
                return v

            if d.get("discrete"):
                hom = {(a, a): 1 for a in objs}
                comp = {(a, a, a): RationalMatrix.identity(1) for a in objs}
                ident = {a: RationalMatrix.identity(1) for a in objs}
                self.doc.categories[name] = FinVCat(name, objs, hom, comp, ident, generators={})
                continue
            hom = {}
            for i, rec in enumerate(_need(d, "hom", p, list)):
                q = _ptr_join(p, "hom", i)
                if not (isinstance(rec, list) and len(rec) == 3 and isinstance(rec[2], int)):
                    raise SpecError("value", q, "hom entry must be [a, b, dim]")
                a, b = ob(rec[0], q + "/0"), ob(rec[1], q + "/1")
                if not 0 <= rec[2] <= MAX_HOM:
                    raise SpecError("size", q + "/2", f"hom dim {rec[2]} outside 0..{MAX_HOM}")
                hom[(a, b)] = rec[2]
            h = lambda a, b: hom.get((a, b), 0)
            comp = {}
            for i, rec in enumerate(d.get("comp", [])):
                q = _ptr_join(p, "comp", i)
                a, b, c = (ob(_need(rec, k, q), _ptr_join(q, k)) for k in ("a", "b", "c"))
                comp[(a, b, c)] = parse_matrix(_need(rec, "matrix", q), h(a, c), h(b, c) * h(a, b),
                                               _ptr_join(q, "matrix"), f"comp{(a, b, c)}")
            ident = {}
            for i, rec in enumerate(d.get("ident", [])):
                q = _ptr_join(p, "ident", i)
                a = ob(_need(rec, "object", q), _ptr_join(q, "object"))
                ident[a] = parse_matrix(_need(rec, "matrix", q), h(a, a), 1, _ptr_join(q, "matrix"), f"ident({a!r})")
            gens = None
            if "generators" in d:
                gens = {}
                for i, rec in enumerate(d["generators"]):
                    q = _ptr_join(p, "generators", i)
                    a, b = (ob(_need(rec, k, q), _ptr_join(q, k)) for k in ("a", "b"))
                    gens[(a, b)] = [parse_matrix(v, h(a, b), 1, _ptr_join(q, "vectors", k), f"generator{(a, b)}")
                                    for k, v in enumerate(_need(rec, "vectors", q, list))]
            self.doc.categories[name] = FinVCat(name, objs, hom, comp, ident, gens)

    def functors(self, sec: dict):
        for name, d in sec.items():
            p = _ptr("functors", name)
            cats = tuple(self.cat(r, _ptr_join(p, "cats", i)) for i, r in enumerate(_need(d, "cats", p, list)))
            dims = {}
            for i, rec in enumerate(d.get("dims", [])):
                q = _ptr_join(p, "dims", i)
                key = tuple(_objs(_need(rec, "key", q, list)))
                if len(key) != len(cats):
                    raise SpecError("shape", _ptr_join(q, "key"), f"key has {len(key)} entries for {len(cats)} variables")
                for k, (c, o) in enumerate(zip(cats, key)):
                    self.check_obj(c, o, _ptr_join(q, "key", k))
                dims[key] = _need(rec, "dim", q, int)
            acts = {}
            for i, rec in enumerate(d.get("actions", [])):
                q = _ptr_join(p, "actions", i)
                var = _need(rec, "var", q, int)
                if not 0 <= var < len(cats):
                    raise SpecError("value", _ptr_join(q, "var"), f"variable {var} out of range")
                key = tuple(_objs(_need(rec, "key", q, list)))
                tgt = _obj(_need(rec, "target", q))
                for k, (c, o) in enumerate(zip(cats, key)):
                    self.check_obj(c, o, _ptr_join(q, "key", k))
                self.check_obj(cats[var], tgt, _ptr_join(q, "target"))
                key2 = key[:var] + (tgt,) + key[var + 1:]
                h = cats[var].hom_dim(key[var], tgt)
                acts[(var, key, tgt)] = parse_matrix(_need(rec, "matrix", q), dims.get(key2, 0),
                                                     h * dims.get(key, 0), _ptr_join(q, "matrix"),
                                                     f"{name} action var {var} at {key} -> {tgt!r}")
            self.doc.functors[name] = TableFunctor(cats, dims, acts, name=name)

    def promonoidals(self, sec: dict):
        for name, d in sec.items():
            p = _ptr("promonoidal", name)
            base_ref = _need(d, "base", p)
            refs = base_ref if isinstance(base_ref, list) else [base_ref]
            cats = tuple(self.cat(r, _ptr_join(p, "base")) for r in refs)
            pf = self.functor(_need(d, "p", p), _ptr_join(p, "p"))
            jf = None if d.get("j") is None else self.functor(d["j"], _ptr_join(p, "j"))
            try:
                ps = PromonoidalStructure(cats if len(cats) > 1 else cats[0], pf, jf, name=name)
            except EnrichedError as e:
                raise SpecError("shape", p, str(e)) from None
            for key in itertools.product(*(c.objects for c in pf.cats)):
                if pf.dim(key) > MAX_P:
                    raise SpecError("size", _ptr_join(p, "p"), f"p{key} has dim {pf.dim(key)} > {MAX_P}")
            self.doc.promonoidal[name] = ps

    def antipodes(self, sec: dict):
        for name, d in sec.items():
            p = _ptr("antipodes", name)
            a = self.cat(_need(d, "base", p), _ptr_join(p, "base"))
            obj_map = {}
            for i, rec in enumerate(_need(d, "objects", p, list)):
                q = _ptr_join(p, "objects", i)
                x, y = _obj(rec[0]), _obj(rec[1])
                self.check_obj(a, x, q + "/0")
                self.check_obj(a, y, q + "/1")
                obj_map[x] = y
            missing = [x for x in a.objects if x not in obj_map]
            if missing:
                raise SpecError("missing", _ptr_join(p, "objects"), f"no image for {missing[0]!r}")
            h = a.hom_dim
            homs = {}
            for i, rec in enumerate(d.get("hom", [])):
                q = _ptr_join(p, "hom", i)
                x, y = _obj(_need(rec, "a", q)), _obj(_need(rec, "b", q))
                homs[(x, y)] = parse_matrix(_need(rec, "matrix", q), h(obj_map[y], obj_map[x]), h(x, y),
                                            _ptr_join(q, "matrix"), f"S on hom{(x, y)}")
            nu = None
            if "nu" in d:
                nu = {}
                for i, rec in enumerate(d["nu"]):
                    q = _ptr_join(p, "nu", i)
                    x, y = _obj(_need(rec, "a", q)), _obj(_need(rec, "b", q))
                    nu[(x, y)] = parse_matrix(_need(rec, "matrix", q), h(obj_map[y], x), h(obj_map[x], y),
                                              _ptr_join(q, "matrix"), f"nu{(x, y)}")
            u = None
            if "u" in d:
                u = {}
                for i, rec in enumerate(d["u"]):
                    q = _ptr_join(p, "u", i)
                    x = _obj(_need(rec, "object", q))
                    u[x] = parse_matrix(_need(rec, "matrix", q), h(obj_map[obj_map[x]], x), 1,
                                        _ptr_join(q, "matrix"), f"u({x!r})")
            self.doc.antipodes[name] = Antipode(a, obj_map, homs, nu=nu, u=u, name=name)

    def kernels(self, sec: dict):
        for name, d in sec.items():
            p = _ptr("kernels", name)
            data = self.functor(_need(d, "data", p), _ptr_join(p, "data"))
            src = self.structure(d.get("source"), _ptr_join(p, "source"))
            tgt = self.structure(d.get("target"), _ptr_join(p, "target"))
            a_cats = None
            if "a_cats" in d:
                a_cats = [self.cat(r, _ptr_join(p, "a_cats", i)) for i, r in enumerate(d["a_cats"])]
            try:
                self.doc.kernels[name] = Kernel(data, src, tgt, name=name, a_cats=a_cats)
            except EnrichedError as e:
                raise SpecError("shape", p, str(e)) from None

    def witnesses(self, sec: dict):
        for name, d in sec.items():
            p = _ptr("witnesses", name)
            ps = self.structure(_need(d, "promonoidal", p), _ptr_join(p, "promonoidal"))
            role = _need(d, "role", p)
            if role not in ("right_unit", "left_unit"):
                raise SpecError("value", _ptr_join(p, "role"), f"unknown witness role {role!r}")
            if ps.n != 1 or ps.j is None:
                raise SpecError("value", p, "unit witnesses need a single base category and a unit")
            a = ps.base
            out = {}
            for i, rec in enumerate(_need(d, "entries", p, list)):
                q = _ptr_join(p, "entries", i)
                key = tuple(_objs(_need(rec, "key", q, list)))
                if len(key) != 3:
                    raise SpecError("shape", _ptr_join(q, "key"), "witness key must be a triple")
                for k, o in enumerate(key):
                    self.check_obj(a, o, _ptr_join(q, "key", k))
                if role == "right_unit":
                    x, m, b = key
                    rows, cols = a.hom_dim(x, b), ps.p_dim(x, m, b) * ps.j_dim(m)
                else:
                    m, x, b = key
                    rows, cols = a.hom_dim(x, b), ps.p_dim(m, x, b) * ps.j_dim(m)
                out[key] = parse_matrix(_need(rec, "matrix", q), rows, cols, _ptr_join(q, "matrix"),
                                        f"{role}{key}")
            setattr(ps, role, out)
            self.doc.witnesses[name] = d

    def species(self, d: dict):
        from .gallery.species import Species, TruncationOverflow, build_species_category
        p = _ptr("species")
        n = _need(d, "truncation", p, int)
        if not 0 <= n <= MAX_TRUNCATION:
            raise SpecError("size", _ptr_join(p, "truncation"), f"truncation {n} outside 0..{MAX_TRUNCATION}")
        cat, ps = build_species_category(n)
        members = {}
        for name, rec in _need(d, "members", p, dict).items():
            q = _ptr_join(p, "members", name)
            dims, gens = {}, {}
            for deg, dim in _need(rec, "dims", q, dict).items():
                k = int(deg)
                if not 0 <= k <= n:
                    raise SpecError("size", _ptr_join(q, "dims", deg), f"degree {k} exceeds truncation {n}")
                dims[k] = dim
                mats = rec.get("gens", {}).get(deg, [])
                gens[k] = [parse_matrix(m, dim, dim, _ptr_join(q, "gens", deg, i), f"{name}({k}) generator")
                           for i, m in enumerate(mats)]
            try:
                members[name] = Species(cat, gens, dims, name=name)
            except (EnrichedError, TruncationOverflow) as e:
                raise SpecError("value", q, str(e)) from None
        self.doc.species = {"category": cat, "promonoidal": ps, "members": members}

    def boolean(self, sec: dict):
        from .gallery.boolean import BoolInstance
        for name, d in sec.items():
            p = _ptr("boolean", name)
            carrier = tuple(_objs(_need(d, "carrier", p, list)))
            if len(carrier) > MAX_CARRIER:
                raise SpecError("size", _ptr_join(p, "carrier"), f"{len(carrier)} elements exceed {MAX_CARRIER}")
            cs = set(carrier)
            triples = []
            for i, t in enumerate(_need(d, "p", p, list)):
                t = tuple(_objs(t))
                if len(t) != 3 or any(x not in cs for x in t):
                    raise SpecError("value", _ptr_join(p, "p", i), f"bad triple {t!r}")
                triples.append(t)
            cand = d.get("candidate")
            if cand is not None:
                cand = frozenset(_objs(cand))
                if not cand <= cs:
                    raise SpecError("value", _ptr_join(p, "candidate"), "candidate outside the carrier")
            self.doc.boolean[name] = BoolInstance(d.get("mode", "custom"), carrier, frozenset(triples), cand)


def build_document(data: Any) -> SpecDocument:
    if not isinstance(data, dict):
        raise SpecError("value", "", "top level must be an object")
    for k in data:
        if k not in TOP_KEYS:
            raise SpecError("value", _ptr(k), f"unknown top-level key {k!r}")
    if data.get("scalar", "rational") != "rational":
        raise SpecError("value", "/scalar", "only the rational scalar field is supported")
    ld = _Loader(data)
    for key, fn in (("categories", ld.categories), ("functors", ld.functors), ("promonoidal", ld.promonoidals),
                    ("antipodes", ld.antipodes), ("kernels", ld.kernels), ("witnesses", ld.witnesses),
                    ("boolean", ld.boolean)):
        sec = data.get(key, {})
        if not isinstance(sec, dict):
            raise SpecError("value", _ptr(key), "section must be an object keyed by name")
        fn(sec)
    if data.get("species") is not None:
        ld.species(data["species"])
    ld.doc.meta = dict(data.get("meta", {}))
    return ld.doc


# ---------------------------------------------------------------------------
# emission


class _Emitter:
    def __init__(self):
        self.cat_names: dict[int, str] = {}
        self.out: dict = {"scalar": "rational", "categories": {}, "functors": {}, "promonoidal": {},
                          "antipodes": {}, "kernels": {}, "witnesses": {}}
        self._fnames: dict[int, str] = {}
        self._psnames: dict[int, str] = {}

    def _fresh(self, table: dict, name: str) -> str:
        base, k = name, 1
        while name in table:
            k += 1
            name = f"{base}_{k}"
        return name

    def cat_ref(self, c: FinVCat) -> str:
        if getattr(c, "is_opposite", False):
            return self.cat_ref(c.op()) + "^op"
        if id(c) not in self.cat_names:
            name = self._fresh(self.out["categories"], c.name)
            self.cat_names[id(c)] = name
            self.out["categories"][name] = self.cat_json(c)
        return self.cat_names[id(c)]

    def cat_json(self, c: FinVCat) -> dict:
        objs = list(c.objects)
        if all(c.hom_dim(a, b) == (1 if a == b else 0) for a in objs for b in objs) and \
                all(c.ident(a) == RationalMatrix.identity(1) for a in objs):
            return {"objects": objs, "discrete": True}
        d = {"objects": objs, "hom": [[a, b, c.hom_dim(a, b)] for a in objs for b in objs if c.hom_dim(a, b)]}
        d["comp"] = [{"a": a, "b": b, "c": x, "matrix": matrix_to_json(c.comp(a, b, x))}
                     for a in objs for b in objs for x in objs
                     if c.hom_dim(a, b) and c.hom_dim(b, x) and c.hom_dim(a, x)]
        d["ident"] = [{"object": a, "matrix": matrix_to_json(c.ident(a))} for a in objs if c.hom_dim(a, a)]
        if getattr(c, "_generators", None) is not None:
            d["generators"] = [{"a": a, "b": b, "vectors": [matrix_to_json(v) for v in c.generators(a, b)]}
                               for a in objs for b in objs if c.hom_dim(a, b)]
        return d

    def functor(self, f: Functor, name: str | None = None) -> str:
        if id(f) in self._fnames:
            return self._fnames[id(f)]
        name = self._fresh(self.out["functors"], name or f.name)
        cats = [self.cat_ref(c) for c in f.cats]
        keys = [k for k in itertools.product(*(c.objects for c in f.cats)) if f.dim(k)]
        acts = []
        for key in keys:
            for i, c in enumerate(f.cats):
                for t in c.objects:
                    h = c.hom_dim(key[i], t)
                    key2 = key[:i] + (t,) + key[i + 1:]
                    if not h or not f.dim(key2):
                        continue
                    m = f.action(i, key, t)
                    if t == key[i] and h == 1 and c.ident(t) == RationalMatrix.identity(1) \
                            and m == RationalMatrix.identity(f.dim(key)):
                        continue
                    acts.append({"var": i, "key": list(key), "target": t, "matrix": matrix_to_json(m)})
        self.out["functors"][name] = {"cats": cats, "dims": [{"key": list(k), "dim": f.dim(k)} for k in keys],
                                      "actions": acts}
        self._fnames[id(f)] = name
        return name

    def promonoidal(self, ps: PromonoidalStructure, name: str | None = None) -> str:
        if id(ps) in self._psnames:
            return self._psnames[id(ps)]
        name = self._fresh(self.out["promonoidal"], name or ps.name)
        refs = [self.cat_ref(c) for c in ps.cats]
        d = {"base": refs if ps.n > 1 else refs[0], "p": self.functor(ps.p, f"{name}.p"),
             "j": None if ps.j is None else self.functor(ps.j, f"{name}.j")}
        self.out["promonoidal"][name] = d
        self._psnames[id(ps)] = name
        for role in ("right_unit", "left_unit"):
            w = getattr(ps, role)
            if w:
                self.out["witnesses"][f"{name}.{role}"] = {
                    "promonoidal": name, "role": role,
                    "entries": [{"key": list(k), "matrix": matrix_to_json(m)} for k, m in w.items()]}
        return name

    def antipode(self, s: Antipode, name: str | None = None) -> str:
        name = self._fresh(self.out["antipodes"], name or s.name)
        a = s.base_cat
        objs = list(a.objects)
        d = {"base": self.cat_ref(a), "objects": [[x, s(x)] for x in objs],
             "hom": [{"a": x, "b": y, "matrix": matrix_to_json(s.hom(x, y))}
                     for x in objs for y in objs if a.hom_dim(x, y)]}
        if s.nu is not None:
            d["nu"] = [{"a": x, "b": y, "matrix": matrix_to_json(m)} for (x, y), m in s.nu.items()]
        if s.u is not None:
            d["u"] = [{"object": x, "matrix": matrix_to_json(m)} for x, m in s.u.items()]
        self.out["antipodes"][name] = d
        return name

    def kernel(self, k: Kernel, name: str | None = None) -> str:
        name = self._fresh(self.out["kernels"], name or k.name)
        d = {"data": self.functor(k.data, f"{name}.data"),
             "source": None if k.source is None else self.promonoidal(k.source),
             "target": None if k.target is None else self.promonoidal(k.target),
             "a_cats": [self.cat_ref(c) for c in k.a_cats]}
        self.out["kernels"][name] = d
        return name


def emit_document(promonoidal=(), antipodes=(), kernels=(), functors=(), meta=None) -> dict:
    """Serialize live objects (each item an object or a ``(name, object)`` pair)."""
    em = _Emitter()

    def named(items):
        for it in items:
            yield it if isinstance(it, tuple) else (None, it)

    for nm, ps in named(promonoidal):
        em.promonoidal(ps, nm)
    for nm, s in named(antipodes):
        em.antipode(s, nm)
    for nm, k in named(kernels):
        em.kernel(k, nm)
    for nm, f in named(functors):
        em.functor(f, nm)
    out = {k: v for k, v in em.out.items() if v or k == "scalar"}
    if meta:
        out["meta"] = meta
    return out


def species_section(truncation: int, members: dict) -> dict:
    return {"truncation": truncation, "members": {
        name: {"dims": {str(n): d for n, d in f._dims.items()},
               "gens": {str(n): [matrix_to_json(m) for m in g] for n, g in f.gens.items() if g}}
        for name, f in members.items()}}


def boolean_section(instances: dict) -> dict:
    return {name: {"mode": b.mode, "carrier": list(b.carrier), "p": [list(t) for t in sorted(b.p)],
                   "candidate": None if b.candidate is None else sorted(b.candidate)}
            for name, b in instances.items()}


def dump_spec(doc: dict, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=1, sort_keys=False) + "\n", encoding="utf-8")


def bundled_spec_path(name: str = "z3_hopf.json") -> Path:
    """Path of an input document shipped with the package."""
    from importlib import resources
    return Path(str(resources.files("catfourier") / "data" / name))
