"""Event catalog ingestion, filtering, and time binning.

A catalog is an ordered sequence of (time, severity, weapon, source)
records.  Times are real-valued days since 1970-01-01 (UTC midnight of the
event date); severities are nonnegative death counts.  The CSV schema is
a header row with columns ``date`` (ISO ``YYYY-MM-DD``) and ``deaths``
(integer), plus optional ``weapon`` and ``source`` columns.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from datetime import date, timedelta
from pathlib import Path

import numpy as np

from .errors import CatalogFormatError

__all__ = [
    "EventRecord",
    "EventCatalog",
    "BinnedCounts",
    "LoadWarnings",
    "load_catalog",
    "filter_tail",
    "bin_events",
    "day_number",
    "day_to_date",
]

_EPOCH = date(1970, 1, 1)


def day_number(d: date) -> float:
    """Days since 1970-01-01 at UTC midnight of ``d``."""
    return float((d - _EPOCH).days)


def day_to_date(day: float) -> date:
    """Calendar date containing day number ``day``."""
    return _EPOCH + timedelta(days=int(math.floor(day)))


@dataclass(frozen=True)
class EventRecord:
    """One event: when it happened, how severe, weapon category, source label."""

    time: float
    severity: int
    weapon: str = ""
    source: str = ""

    def __post_init__(self):
        if not math.isfinite(self.time):
            raise ValueError(f"event time must be finite, got {self.time}")
        if self.severity < 0:
            raise ValueError(f"severity must be >= 0, got {self.severity}")


@dataclass(frozen=True)
class EventCatalog:
    """Events sorted nondecreasing by time, with the covered time span.

    ``span`` is None only for an empty catalog whose extent is undefined
    (e.g. loaded from a file with no valid rows).
    """

    events: tuple[EventRecord, ...]
    span: tuple[float, float] | None = None

    def __post_init__(self):
        times = [e.time for e in self.events]
        if any(b < a for a, b in zip(times, times[1:])):
            raise ValueError("events must be sorted nondecreasing by time")
        if self.span is not None:
            t0, t1 = self.span
            if t0 > t1:
                raise ValueError(f"span start {t0} exceeds span end {t1}")
            if times and (times[0] < t0 or times[-1] > t1):
                raise ValueError("span does not cover all event times")
        elif times:
            raise ValueError("nonempty catalog requires a span")

    def __len__(self) -> int:
        return len(self.events)

    @property
    def times(self) -> np.ndarray:
        return np.array([e.time for e in self.events], dtype=float)

    @property
    def severities(self) -> np.ndarray:
        return np.array([e.severity for e in self.events], dtype=float)


@dataclass(frozen=True)
class BinnedCounts:
    """Event counts in consecutive left-closed right-open time bins."""

    dt: float
    counts: tuple[int, ...]
    origin: float

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError(f"bin width must be > 0, got {self.dt}")
        if any(c < 0 for c in self.counts):
            raise ValueError("bin counts must be >= 0")

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def counts_array(self) -> np.ndarray:
        return np.array(self.counts, dtype=float)

    @property
    def edges(self) -> np.ndarray:
        """Bin edges, length len(counts) + 1."""
        return self.origin + self.dt * np.arange(len(self.counts) + 1)


@dataclass
class LoadWarnings:
    """Tally of rows dropped while loading a catalog."""

    bad_date: int = 0
    bad_severity: int = 0
    missing_fields: int = 0

    @property
    def total(self) -> int:
        return self.bad_date + self.bad_severity + self.missing_fields


def load_catalog(path: str | Path) -> tuple[EventCatalog, LoadWarnings]:
    """Read a catalog CSV, dropping and counting unparseable rows.

    Returns the sorted catalog plus a tally of dropped rows.  Raises
    FileNotFoundError if the file is missing, CatalogFormatError if the
    header lacks the required columns or no data row survives parsing.
    Ties in time keep file order (stable sort).
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(str(path))

    warnings = LoadWarnings()
    records: list[EventRecord] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if header is None or "date" not in header or "deaths" not in header:
            raise CatalogFormatError(
                f"{path}: header must contain 'date' and 'deaths' columns, got {header}"
            )
        n_rows = 0
        for row in reader:
            n_rows += 1
            raw_date = (row.get("date") or "").strip()
            raw_deaths = (row.get("deaths") or "").strip()
            if not raw_date or not raw_deaths:
                warnings.missing_fields += 1
                continue
            try:
                t = day_number(date.fromisoformat(raw_date))
            except ValueError:
                warnings.bad_date += 1
                continue
            try:
                deaths = int(raw_deaths)
            except ValueError:
                warnings.bad_severity += 1
                continue
            if deaths < 0:
                warnings.bad_severity += 1
                continue
            records.append(
                EventRecord(
                    time=t,
                    severity=deaths,
                    weapon=(row.get("weapon") or "").strip(),
                    source=(row.get("source") or "").strip(),
                )
            )

    if n_rows > 0 and not records:
        raise CatalogFormatError(f"{path}: no valid rows ({warnings.total} dropped)")

    records.sort(key=lambda e: e.time)  # sort() is stable: ties keep file order
    span = (records[0].time, records[-1].time) if records else None
    return EventCatalog(events=tuple(records), span=span), warnings


def write_catalog(catalog: EventCatalog, path: str | Path) -> None:
    """Write events in the same CSV schema load_catalog reads.

    Sub-day time components are dropped: the date column records the
    calendar day containing each event time.
    """
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["date", "deaths", "weapon", "source"])
        for e in catalog.events:
            writer.writerow(
                [day_to_date(e.time).isoformat(), e.severity, e.weapon, e.source]
            )


def filter_tail(
    catalog: EventCatalog,
    x_min: float,
    weapon: str | None = None,
    window: tuple[float, float] | None = None,
) -> EventCatalog:
    """Retain events with severity >= x_min, optionally matching a weapon
    category and falling inside a closed time window.

    An empty result is valid.  With no window the span is unchanged;
    with a window the span is its intersection with the original span
    (None if they are disjoint).
    """
    if x_min < 0:
        raise ValueError(f"x_min must be >= 0, got {x_min}")

    kept = [e for e in catalog.events if e.severity >= x_min]
    if weapon is not None:
        kept = [e for e in kept if e.weapon == weapon]
    span = catalog.span
    if window is not None:
        t0, t1 = window
        kept = [e for e in kept if t0 <= e.time <= t1]
        if span is not None:
            lo, hi = max(span[0], t0), min(span[1], t1)
            span = (lo, hi) if lo <= hi else None
        else:
            span = None
    if span is None and kept:
        span = (kept[0].time, kept[-1].time)
    return EventCatalog(events=tuple(kept), span=span)


def bin_events(catalog: EventCatalog, dt: float) -> BinnedCounts:
    """Count events in consecutive [origin + k*dt, origin + (k+1)*dt) bins
    covering the catalog span.  Total count is conserved.
    """
    if dt <= 0:
        raise ValueError(f"bin width must be > 0, got {dt}")
    if len(catalog) == 0:
        raise ValueError("cannot bin an empty catalog")

    t_start, t_end = catalog.span
    origin = t_start
    n_bins = int(math.floor((t_end - origin) / dt)) + 1
    idx = np.floor((catalog.times - origin) / dt).astype(int)
    # events exactly at t_end land in the last bin by construction
    counts = np.bincount(idx, minlength=n_bins)
    return BinnedCounts(dt=dt, counts=tuple(int(c) for c in counts), origin=origin)
