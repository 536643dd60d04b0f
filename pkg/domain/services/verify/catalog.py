from __future__ import annotations

import csv
from collections import defaultdict
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from domain.models.named import NamedSeries
from domain.models.report import Sign, SignException, SignPattern
from domain.settings import get_settings, repo_root


class CatalogError(LookupError):
    """Каталог отсутствует, битый или не знает запрошенного имени."""


def catalogs_dir() -> Path:
    override = get_settings().catalogs_dir
    if override is not None:
        return Path(override)
    return repo_root("data/catalogs") / "data" / "catalogs"


def _rows(root: Path, filename: str) -> List[Dict[str, str]]:
    path = root / filename
    if not path.exists():
        raise CatalogError(f"catalog {path} not found")
    with path.open("r", encoding="utf-8", newline="") as f:
        return [
            {k: (v or "").strip() for k, v in row.items()}
            for row in csv.DictReader(f)
        ]


@lru_cache(maxsize=4)
def _load_patterns(root: Path) -> Dict[str, SignPattern]:
    """
    sign_patterns.csv: scan,series,modulus,kind,residues: знаки по вычетам через ';'
    sign_exceptions.csv: scan,index,value: индексы, сверяемые с точным значением
    """
    exceptions: Dict[str, List[SignException]] = defaultdict(list)
    for row in _rows(root, "sign_exceptions.csv"):
        try:
            exceptions[row["scan"]].append(
                SignException(index=int(row["index"]), value=int(row["value"]))
            )
        except (KeyError, ValueError) as exc:
            raise CatalogError(f"bad sign exception row {row}: {exc}") from exc

    table: Dict[str, SignPattern] = {}
    for row in _rows(root, "sign_patterns.csv"):
        scan = row.get("scan", "")
        if not scan:
            continue
        try:
            signs = [Sign(s) for s in row["residues"].split(";")]
            table[scan] = SignPattern(
                name=scan,
                series=NamedSeries(row["series"]),
                modulus=int(row["modulus"]),
                expected={r: s for r, s in enumerate(signs) if s is not Sign.any},
                exceptions=exceptions.get(scan, []),
                kind=row["kind"],  # type: ignore[arg-type]
            )
        except (KeyError, ValueError, ValidationError) as exc:
            raise CatalogError(f"bad sign pattern row {row}: {exc}") from exc
    return table


def sign_patterns(root: Optional[Path] = None) -> Dict[str, SignPattern]:
    return _load_patterns(root or catalogs_dir())


def sign_pattern(scan: str, root: Optional[Path] = None) -> SignPattern:
    table = sign_patterns(root)
    if scan not in table:
        raise CatalogError(f"unknown sign pattern {scan!r}; known: {sorted(table)}")
    return table[scan]


def expected_falsification(conjecture: str, root: Optional[Path] = None) -> Dict[str, List[int]]:
    """conjecture_expected.csv: conjecture,part,n: пустой n означает «часть не опровергается»."""
    out: Dict[str, List[int]] = {}
    for row in _rows(root or catalogs_dir(), "conjecture_expected.csv"):
        if row.get("conjecture") != conjecture:
            continue
        indices = out.setdefault(row["part"], [])
        if row.get("n"):
            indices.append(int(row["n"]))
    if not out:
        raise CatalogError(f"no expectation recorded for {conjecture!r}")
    return {part: sorted(ns) for part, ns in out.items()}


def sign_checks(root: Optional[Path] = None) -> List[Tuple[NamedSeries, int, Sign]]:
    """sign_checks.csv: series,index,expected: отдельные строгие знаки."""
    out: List[Tuple[NamedSeries, int, Sign]] = []
    for row in _rows(root or catalogs_dir(), "sign_checks.csv"):
        try:
            out.append((NamedSeries(row["series"]), int(row["index"]), Sign(row["expected"])))
        except (KeyError, ValueError) as exc:
            raise CatalogError(f"bad sign check row {row}: {exc}") from exc
    return out
