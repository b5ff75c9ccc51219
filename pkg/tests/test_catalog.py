import math
from datetime import date

import numpy as np
import pytest

from tailcast import (
    BinnedCounts,
    CatalogFormatError,
    EventCatalog,
    EventRecord,
    bin_events,
    day_number,
    day_to_date,
    filter_tail,
    load_catalog,
    write_catalog,
)


def make_catalog(times, severities, weapon="", source=""):
    events = tuple(
        EventRecord(time=float(t), severity=int(s), weapon=weapon, source=source)
        for t, s in zip(times, severities)
    )
    span = (events[0].time, events[-1].time) if events else None
    return EventCatalog(events=events, span=span)


class TestDayNumbers:
    def test_epoch_is_day_zero(self):
        assert day_number(date(1970, 1, 1)) == 0.0

    def test_round_trip(self):
        for d in (date(1970, 1, 1), date(2001, 9, 11), date(1968, 3, 2)):
            assert day_to_date(day_number(d)) == d

    def test_known_offset(self):
        assert day_number(date(1970, 1, 11)) == 10.0


class TestEventRecord:
    def test_negative_severity_rejected(self):
        with pytest.raises(ValueError):
            EventRecord(time=0.0, severity=-1)

    def test_nonfinite_time_rejected(self):
        with pytest.raises(ValueError):
            EventRecord(time=math.inf, severity=3)

    def test_zero_severity_allowed(self):
        assert EventRecord(time=1.0, severity=0).severity == 0


class TestEventCatalog:
    def test_unsorted_rejected(self):
        events = (EventRecord(time=5.0, severity=1), EventRecord(time=1.0, severity=1))
        with pytest.raises(ValueError):
            EventCatalog(events=events, span=(1.0, 5.0))

    def test_span_must_cover_events(self):
        events = (EventRecord(time=5.0, severity=1),)
        with pytest.raises(ValueError):
            EventCatalog(events=events, span=(6.0, 7.0))

    def test_empty_with_undefined_span(self):
        c = EventCatalog(events=(), span=None)
        assert len(c) == 0 and c.span is None


class TestLoadCatalog:
    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_catalog(tmp_path / "nope.csv")

    def test_malformed_header(self, make_catalog_csv):
        path = make_catalog_csv([("2001-09-11", 10)], header=("when", "killed"))
        with pytest.raises(CatalogFormatError):
            load_catalog(path)

    def test_empty_file_valid_header(self, make_catalog_csv):
        catalog, warn = load_catalog(make_catalog_csv([]))
        assert len(catalog) == 0
        assert catalog.span is None
        assert warn.total == 0

    def test_rows_sorted_by_date(self, make_catalog_csv):
        path = make_catalog_csv(
            [("2001-09-11", 2977), ("1980-01-01", 3), ("1995-06-01", 7)]
        )
        catalog, _ = load_catalog(path)
        dates = [day_to_date(e.time) for e in catalog.events]
        assert dates == [date(1980, 1, 1), date(1995, 6, 1), date(2001, 9, 11)]
        assert catalog.span == (catalog.events[0].time, catalog.events[-1].time)

    def test_negative_severity_dropped_and_counted(self, make_catalog_csv):
        path = make_catalog_csv([("2001-09-11", -1), ("1980-01-01", 3)])
        catalog, warn = load_catalog(path)
        assert len(catalog) == 1
        assert warn.bad_severity == 1 and warn.total == 1

    def test_bad_date_and_missing_fields_counted(self, make_catalog_csv):
        path = make_catalog_csv(
            [("31/12/1999", 5), ("", 5), ("2000-01-01", ""), ("2000-01-02", 4)]
        )
        catalog, warn = load_catalog(path)
        assert len(catalog) == 1
        assert warn.bad_date == 1 and warn.missing_fields == 2

    def test_all_rows_dropped_is_an_error(self, make_catalog_csv):
        path = make_catalog_csv([("never", 1), ("2000-13-45", 2)])
        with pytest.raises(CatalogFormatError):
            load_catalog(path)

    def test_severity_zero_retained(self, make_catalog_csv):
        catalog, _ = load_catalog(make_catalog_csv([("1999-01-01", 0)]))
        assert len(catalog) == 1

    def test_ties_keep_file_order(self, make_catalog_csv):
        path = make_catalog_csv(
            [("2000-01-01", 1, "a", ""), ("1999-01-01", 2, "", ""),
             ("2000-01-01", 3, "b", "")]
        )
        catalog, _ = load_catalog(path)
        same_day = [e for e in catalog.events if day_to_date(e.time).year == 2000]
        assert [e.severity for e in same_day] == [1, 3]

    def test_deterministic(self, make_catalog_csv):
        rows = [("2001-09-11", 10, "explosive", "x"), ("1980-01-01", 3, "firearm", "y")]
        a, _ = load_catalog(make_catalog_csv(rows, name="a.csv"))
        b, _ = load_catalog(make_catalog_csv(rows, name="b.csv"))
        assert a == b

    def test_optional_columns_default_empty(self, make_catalog_csv):
        path = make_catalog_csv([("1999-01-01", 5)], header=("date", "deaths"))
        catalog, _ = load_catalog(path)
        assert catalog.events[0].weapon == "" and catalog.events[0].source == ""


class TestWriteCatalog:
    def test_round_trip(self, tmp_path):
        c = make_catalog([0.0, 400.5, 12000.0], [3, 11, 2977], weapon="explosive")
        path = tmp_path / "out.csv"
        write_catalog(c, path)
        loaded, warn = load_catalog(path)
        assert warn.total == 0
        assert [e.severity for e in loaded.events] == [3, 11, 2977]
        # sub-day fractions flatten to the containing date
        assert loaded.events[1].time == 400.0
        assert loaded.events[0].weapon == "explosive"


class TestFilterTail:
    def test_no_filter_is_identity(self, make_catalog_csv):
        catalog, _ = load_catalog(
            make_catalog_csv([("1999-01-01", 0), ("2000-01-01", 9), ("2001-01-01", 50)])
        )
        assert filter_tail(catalog, 0.0) == catalog

    def test_threshold_inclusive(self):
        c = make_catalog([0, 1, 2, 3], [1, 9, 10, 50])
        kept = filter_tail(c, 10.0)
        assert [e.severity for e in kept.events] == [10, 50]

    def test_counts_match_direct_scan(self):
        rng = np.random.default_rng(42)
        sev = rng.integers(0, 20, size=1000)
        c = make_catalog(np.arange(1000), sev)
        expected = int(np.sum(sev >= 10))
        assert len(filter_tail(c, 10.0)) == expected

    def test_weapon_filter(self):
        events = (
            EventRecord(time=0.0, severity=5, weapon="explosive"),
            EventRecord(time=1.0, severity=5, weapon="firearm"),
        )
        c = EventCatalog(events=events, span=(0.0, 1.0))
        kept = filter_tail(c, 0.0, weapon="explosive")
        assert len(kept) == 1 and kept.events[0].weapon == "explosive"

    def test_window_filter_and_span(self):
        c = make_catalog([0, 10, 20, 30], [1, 1, 1, 1])
        kept = filter_tail(c, 0.0, window=(5.0, 25.0))
        assert [e.time for e in kept.events] == [10.0, 20.0]
        assert kept.span == (5.0, 25.0)

    def test_disjoint_window_gives_empty(self):
        c = make_catalog([0, 10], [1, 1])
        kept = filter_tail(c, 0.0, window=(100.0, 200.0))
        assert len(kept) == 0 and kept.span is None

    def test_idempotent(self):
        rng = np.random.default_rng(7)
        for seed in range(10):
            rng = np.random.default_rng(seed)
            times = np.sort(rng.uniform(0, 500, 200))
            sev = rng.integers(0, 40, 200)
            c = make_catalog(times, sev)
            once = filter_tail(c, 12.0, window=(50.0, 400.0))
            twice = filter_tail(once, 12.0, window=(50.0, 400.0))
            assert once == twice

    def test_negative_threshold_rejected(self):
        with pytest.raises(ValueError):
            filter_tail(make_catalog([0], [1]), -1.0)


class TestBinEvents:
    def test_single_event(self):
        counts = bin_events(make_catalog([100.0], [5]), 30.0)
        assert counts.counts == (1,)
        assert counts.origin == 100.0

    def test_small_example(self):
        counts = bin_events(make_catalog([0.0, 10.0, 35.0], [1, 1, 1]), 30.0)
        assert counts.counts == (2, 1)

    def test_conservation_uniform(self):
        rng = np.random.default_rng(3)
        times = np.sort(rng.uniform(0, 3840, 10000))
        counts = bin_events(make_catalog(times, np.ones(10000, dtype=int)), 30.0)
        assert len(counts.counts) == 128
        assert sum(counts.counts) == 10000

    def test_conservation_random_dt(self):
        rng = np.random.default_rng(11)
        times = np.sort(rng.uniform(0, 777, 300))
        c = make_catalog(times, np.ones(300, dtype=int))
        for dt in (1.0, 7.3, 30.0, 365.25, 5000.0):
            assert sum(bin_events(c, dt).counts) == 300

    def test_empty_catalog_rejected(self):
        with pytest.raises(ValueError):
            bin_events(EventCatalog(events=(), span=None), 30.0)

    def test_nonpositive_dt_rejected(self):
        with pytest.raises(ValueError):
            bin_events(make_catalog([0.0], [1]), 0.0)

    def test_edges_property(self):
        b = BinnedCounts(dt=30.0, counts=(1, 2, 0), origin=10.0)
        assert np.allclose(b.edges, [10.0, 40.0, 70.0, 100.0])

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            BinnedCounts(dt=30.0, counts=(1, -2), origin=0.0)
