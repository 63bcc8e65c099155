"""Campaign configuration: a small sectioned text format.

Example::

    [campaign]
    degree = 2
    budget = 10000000
    mode = exhaustive          # or random
    seed = 0
    workers = 1
    checkers = profile, lemmas, theorem, fields, sn_transfer, two_primal
    sn_degrees = 2, 3

    [rings]
    catalog 8                  # expands to the default catalog
    gf 4 poly=x^2+x+1

    [monoids]
    N
    Z

    [actions]
    gf 4 poly=x^2+x+1 -> trivial, frobenius
    * -> trivial               # every other ring

Rings without an ``[actions]`` line (and no ``*`` line) use every enumerable
action; incompatible ones land in the exploration stratum.  For ``N^k lex`` an action is a
comma-separated k-tuple of names and tuples are separated by ``;``.
Comments start with ``#`` (or ``;`` outside ``[actions]``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..errors import CapacityError, ConfigError, InvalidSpecError
from ..omonoid import build_monoid
from ..rings import build_ring
from ..search import BUDGET

CHECKERS = ("profile", "lemmas", "theorem", "lemma8", "fields", "sn_transfer", "two_primal")
DEFAULT_CHECKERS = ("profile", "lemmas", "theorem", "lemma8", "two_primal")

_EXTRAS = ("gf 4 poly=x^2+x+1", "product zmod2 zmod2", "smatrix 2 zmod2",
           "smatrix 3 zmod2", "uppertri 2 zmod2")


def catalog_generate(max_order: int) -> list[str]:
    """Default catalog: zmod 2..max_order plus the named extras over Z_2.

    The extras are all built over a 2-element base, so they are included
    whenever ``max_order >= 2``.
    """
    if max_order < 2:
        raise InvalidSpecError(f"max_order must be >= 2, got {max_order}")
    specs = [f"zmod {n}" for n in range(2, max_order + 1)]
    return specs + [s for s in _EXTRAS if s not in specs]


@dataclass
class CampaignConfig:
    rings: list = field(default_factory=list)
    monoids: list = field(default_factory=lambda: ["N"])
    actions: dict = field(default_factory=dict)       # ring spec -> list of action names
    degree: int = 2
    budget: int = BUDGET
    mode: str = "exhaustive"
    seed: int = 0
    trials: int = 10000
    workers: int = 1
    checkers: tuple = DEFAULT_CHECKERS
    sn_degrees: tuple = (2,)
    lemma_bound: int = 2
    timings: bool = False
    out: str | None = None

    def echo(self) -> dict:
        return {
            "rings": list(self.rings), "monoids": list(self.monoids),
            "actions": {k: list(v) for k, v in self.actions.items()},
            "degree": self.degree, "budget": self.budget, "mode": self.mode,
            "seed": self.seed, "trials": self.trials, "checkers": list(self.checkers),
            "sn_degrees": list(self.sn_degrees), "lemma_bound": self.lemma_bound,
            "timings": self.timings,
        }

    def actions_for(self, spec):
        """Configured action names for a ring; '*' is the fallback entry."""
        return self.actions.get(spec, self.actions.get("*"))

    def validate(self):
        if self.degree < 1:
            raise ConfigError("field 'degree': must be >= 1")
        if self.budget < 1:
            raise ConfigError("field 'budget': must be >= 1")
        if self.mode not in ("exhaustive", "random"):
            raise ConfigError(f"field 'mode': unknown mode {self.mode!r}")
        unknown = [c for c in self.checkers if c not in CHECKERS]
        if unknown:
            raise ConfigError(f"field 'checkers': unknown checker(s) {unknown}")
        from ..checkers import action_names
        for spec in self.actions:
            if spec != "*" and spec not in self.rings:
                raise ConfigError(f"field 'actions': ring {spec!r} is not listed in [rings]")
        for spec in self.rings:
            names = self.actions_for(spec)
            if names is None:
                continue
            try:
                R = build_ring(spec)
                known = action_names(R)
            except CapacityError:
                continue
            for name in names:
                for part in (p.strip() for p in name.split(",")):
                    if part not in known:
                        raise ConfigError(f"field 'actions': {spec!r} has no endomorphism "
                                          f"named {part!r} (known: {sorted(known)})")
        return self


_INT_FIELDS = {"degree", "budget", "seed", "trials", "workers", "lemma_bound"}


def parse_config(text: str, source: str = "<config>") -> CampaignConfig:
    cfg = CampaignConfig()
    section = None
    monoids_reset = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split(";", 1)[0].strip() if section != "actions" \
            else raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("campaign", "rings", "monoids", "actions"):
                raise ConfigError(f"{where}: unknown section [{section}]")
            continue
        if section is None:
            raise ConfigError(f"{where}: entry outside any section")
        if section == "campaign":
            key, eq, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not eq:
                raise ConfigError(f"{where}: expected 'key = value'")
            try:
                if key in _INT_FIELDS:
                    setattr(cfg, key, int(value))
                elif key == "mode":
                    cfg.mode = value
                elif key == "checkers":
                    cfg.checkers = tuple(v.strip() for v in value.split(",") if v.strip())
                elif key == "sn_degrees":
                    cfg.sn_degrees = tuple(int(v) for v in value.split(",") if v.strip())
                elif key == "timings":
                    cfg.timings = value.lower() in ("1", "true", "yes", "on")
                elif key == "out":
                    cfg.out = value
                elif key == "rings":
                    cfg.rings.extend(v.strip() for v in value.split(";") if v.strip())
                elif key == "monoids":
                    cfg.monoids = [v.strip() for v in value.split(";") if v.strip()]
                else:
                    raise ConfigError(f"{where}: unknown field {key!r}")
            except ValueError:
                raise ConfigError(f"{where}: field {key!r}: expected an integer, got {value!r}") from None
        elif section == "rings":
            if line.startswith("catalog"):
                parts = line.split()
                if len(parts) != 2 or not parts[1].isdigit():
                    raise ConfigError(f"{where}: field 'rings': expected 'catalog <max-order>'")
                try:
                    cfg.rings.extend(s for s in catalog_generate(int(parts[1])) if s not in cfg.rings)
                except InvalidSpecError as exc:
                    raise ConfigError(f"{where}: field 'rings': {exc}") from None
                continue
            try:
                build_ring(line)
            except (InvalidSpecError, OSError) as exc:
                raise ConfigError(f"{where}: field 'rings': {exc}") from None
            except Exception as exc:
                raise ConfigError(f"{where}: field 'rings': {type(exc).__name__}: {exc}") from None
            if line not in cfg.rings:
                cfg.rings.append(line)
        elif section == "monoids":
            if not monoids_reset:
                cfg.monoids = []
                monoids_reset = True
            try:
                build_monoid(line)
            except InvalidSpecError as exc:
                raise ConfigError(f"{where}: field 'monoids': {exc}") from None
            cfg.monoids.append(line)
        elif section == "actions":
            spec, arrow, names = line.partition("->")
            if not arrow:
                raise ConfigError(f"{where}: field 'actions': expected '<ring> -> <names>'")
            cfg.actions[spec.strip()] = [n.strip() for n in names.split(";" if ";" in names else ",")
                                         if n.strip()]
    if not cfg.rings:
        raise ConfigError(f"{source}: no rings configured")
    return cfg.validate()


def load_config(path) -> CampaignConfig:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return parse_config(text, str(path))
