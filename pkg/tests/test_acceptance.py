"""Acceptance suite: every criterion at its stated tolerance, one pass/fail
line per criterion.

Run under pytest (use -s to see the lines as they complete) or standalone:

    python tests/test_acceptance.py
"""

import math
import time

import numpy as np
import pytest

# ---------------------------------------------------------------------------
# reporting helper
# ---------------------------------------------------------------------------

RESULTS = []


def report(num: int, name: str, passed: bool, detail: str = "") -> bool:
    line = f"[acceptance {num:02d}] {'PASS' if passed else 'FAIL'} {name}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    RESULTS.append((num, passed, line))
    return passed


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


# ---------------------------------------------------------------------------
# 1. metric reproduction
# ---------------------------------------------------------------------------

def criterion_01():
    from relaykit.learn import balanced_accuracy

    def run():
        cm = np.array([[2105, 2], [0, 1852]])
        return round(100.0 * balanced_accuracy(cm), 2)

    value, dt = timed(run)
    ok = value == 99.95 and dt < 1.0
    return report(1, "balanced accuracy on the published confusion counts", ok,
                  f"got {value}%, {dt:.3f}s")


def test_criterion_01():
    assert criterion_01()


# ---------------------------------------------------------------------------
# 2. AR-rule reproduction on the published coefficient tables
# ---------------------------------------------------------------------------

def criterion_02():
    from relaykit.relay import (DIRECTION_ROWS, ZONE_ROWS, ArRelayConfig,
                                direction_from_phi2, zone_from_phi7)

    def run():
        cfg = ArRelayConfig(th1=-0.7, th2=-0.1)
        direction_errors = [
            (r.system, r.fed_by, r.fault_ohm, r.crowbar_ohm)
            for r in DIRECTION_ROWS if direction_from_phi2(r.phi2, cfg) != r.fed_by
        ]
        zone_errors = [
            (r.zone, r.fault_ohm, r.crowbar_ohm)
            for r in ZONE_ROWS if zone_from_phi7(r.phi7, cfg) != r.zone
        ]
        return direction_errors, zone_errors

    (direction_errors, zone_errors), dt = timed(run)
    ok = not direction_errors and not zone_errors and dt < 1.0
    detail = (f"{len(direction_errors)} direction + {len(zone_errors)} zone "
              f"misclassifications out of 54+18 published rows; "
              f"offending rows: {direction_errors + zone_errors}; {dt:.3f}s")
    return report(2, "published AR coefficient rows classify with 0 errors", ok, detail)


def test_criterion_02():
    """Four of the published coefficient rows contradict the thresholds they
    accompany (one 39-bus direction row with a phase-b value above -0.7 and
    three zone-2 rows with a positive phase-a value), so a zero-error
    reproduction is not attainable; the failure detail names the rows, and
    tests/test_relay.py pins the 50/54 + 15/18 split with the four known
    violations."""
    assert criterion_02()


# ---------------------------------------------------------------------------
# 3. DWT reconstruction and Parseval
# ---------------------------------------------------------------------------

def criterion_03():
    from relaykit.features import (dwt, filter_length, idwt, max_level,
                                   parse_wavelet_name, supported_wavelets,
                                   wavelet_energy, WaveletSpec)

    def run():
        rng = np.random.default_rng(303)
        worst_rec, worst_par = 0.0, 0.0
        for name in supported_wavelets():
            family, order = parse_wavelet_name(name)
            flen = filter_length(name)
            orthogonal = name[:2] in ("db", "sy", "co")
            for trial in range(100):
                n = int(rng.integers(max(48, 2 * flen), 300))
                lvl = max(1, min(3, max_level(n, flen)))
                x = rng.standard_normal(n)
                res = dwt(x, WaveletSpec(family, order, lvl))
                worst_rec = max(worst_rec, float(np.abs(idwt(res) - x).max()))
                if orthogonal:
                    m = int(rng.choice([64, 128, 256]))
                    xp = rng.standard_normal(m)
                    lvl_p = max(1, min(3, max_level(m, flen)))
                    rp = dwt(xp, WaveletSpec(family, order, lvl_p), mode="periodic")
                    total = wavelet_energy(rp.approx) + sum(map(wavelet_energy, rp.details))
                    worst_par = max(worst_par,
                                    abs(total - np.sum(xp * xp)) / np.sum(xp * xp))
        return worst_rec, worst_par

    (worst_rec, worst_par), dt = timed(run)
    ok = worst_rec < 1e-8 and worst_par < 1e-10 and dt < 30.0
    return report(3, "DWT reconstruction and Parseval across all wavelets", ok,
                  f"max reconstruction {worst_rec:.2e}, max Parseval {worst_par:.2e}, {dt:.1f}s")


def test_criterion_03():
    assert criterion_03()


# ---------------------------------------------------------------------------
# 4. decomposition-depth formula
# ---------------------------------------------------------------------------

def criterion_04():
    from relaykit.features import max_level
    value = max_level(167, 8)
    ok = value == 4
    return report(4, "max decomposition level of a one-cycle window", ok,
                  f"max_level(167, 8) = {value}")


def test_criterion_04():
    assert criterion_04()


# ---------------------------------------------------------------------------
# 5. feature brute-force oracles
# ---------------------------------------------------------------------------

def _cq_oracle(x, ql, qh):
    lo, hi = np.quantile(np.asarray(x), [ql, qh])
    diffs = [abs(x[i + 1] - x[i]) for i in range(len(x) - 1)
             if lo <= x[i] <= hi and lo <= x[i + 1] <= hi]
    return sum(diffs) / len(diffs) if diffs else 0.0


def _entropy_oracle(x, m, r):
    n = len(x)

    def count(length):
        total = 0
        for i in range(n - m):
            for j in range(i + 1, n - m):
                if max(abs(x[i + k] - x[j + k]) for k in range(length)) < r:
                    total += 1
        return total

    b = count(m)
    a = count(m + 1)
    if a == 0 or b == 0:
        return None
    return -math.log(a / b)


def _moments_oracle(x):
    n = len(x)
    mu = sum(x) / n
    var = sum((v - mu) ** 2 for v in x) / n
    kurt = (sum((v - mu) ** 4 for v in x) / n) / var ** 2 - 3.0 if var > 0 else None
    return var, kurt


def _cid_oracle(x):
    return math.sqrt(sum((x[i + 1] - x[i]) ** 2 for i in range(len(x) - 1)))


def _trend_oracle(x, chunk, attr, agg):
    vals = []
    for c in range(len(x) // chunk):
        y = x[c * chunk:(c + 1) * chunk]
        t = list(range(chunk))
        tm, ym = sum(t) / chunk, sum(y) / chunk
        sxx = sum((ti - tm) ** 2 for ti in t)
        slope = sum((ti - tm) * (yi - ym) for ti, yi in zip(t, y)) / sxx
        inter = ym - slope * tm
        if attr == "slope":
            vals.append(slope)
        elif attr == "intercept":
            vals.append(inter)
        else:
            resid = sum((yi - inter - slope * ti) ** 2 for ti, yi in zip(t, y))
            vals.append(math.sqrt(resid / (chunk - 2) / sxx) if chunk > 2 else 0.0)
    return {"mean": lambda v: sum(v) / len(v), "min": min, "max": max,
            "var": lambda v: sum((u - sum(v) / len(v)) ** 2 for u in v) / len(v)}[agg](vals)


def _fft_oracle(x):
    n = len(x)
    return [sum(x[t] * complex(math.cos(-2 * math.pi * k * t / n),
                               math.sin(-2 * math.pi * k * t / n))
                for t in range(n)) for k in range(n // 2 + 1)]


def criterion_05():
    from relaykit.features import (change_quantile, complexity_invariant_distance,
                                   excess_kurtosis, fft_coefficients, linear_trend,
                                   sample_entropy, variance)

    def run():
        rng = np.random.default_rng(505)
        worst = 0.0
        for _ in range(1000):
            n = int(rng.integers(10, 65))
            x = rng.standard_normal(n) * rng.uniform(0.1, 5.0)
            xl = [float(v) for v in x]

            ql, qh = sorted(rng.uniform(0.05, 0.95, 2))
            if qh - ql > 1e-3:
                worst = max(worst, abs(change_quantile(x, ql, qh) - _cq_oracle(xl, ql, qh)))

            var_o, kurt_o = _moments_oracle(xl)
            worst = max(worst, abs(variance(x) - var_o))
            if kurt_o is not None:
                worst = max(worst, abs(excess_kurtosis(x) - kurt_o))

            worst = max(worst, abs(complexity_invariant_distance(x) - _cid_oracle(xl)))

            r = 0.25 * float(np.std(x))
            ent_o = _entropy_oracle(xl, 2, r)
            if ent_o is not None:
                worst = max(worst, abs(sample_entropy(x, 2, r) - ent_o))

            chunk = int(rng.integers(3, 9))
            attr = str(rng.choice(["slope", "intercept", "stderr"]))
            agg = str(rng.choice(["mean", "min", "max", "var"]))
            worst = max(worst, abs(linear_trend(x, chunk, attr, agg)
                                   - _trend_oracle(xl, chunk, attr, agg)))

            mine = fft_coefficients(x)
            want = _fft_oracle(xl)
            worst = max(worst, float(np.abs(mine - np.asarray(want)).max()) / max(1.0, n))
        return worst

    worst, dt = timed(run)
    ok = worst < 1e-9 and dt < 60.0
    return report(5, "six features match brute-force oracles on 1000 signals", ok,
                  f"worst abs deviation {worst:.2e}, {dt:.1f}s")


def test_criterion_05():
    assert criterion_05()


# ---------------------------------------------------------------------------
# 6. AR coefficient recovery
# ---------------------------------------------------------------------------

def criterion_06():
    from relaykit.features import ar_fit

    def run():
        # any solution of the recursion mixes the 0.5^t and 0.25^t modes; a
        # near-cancelling mix keeps both observable relative to the record
        # power, so the coefficients stay identifiable once noise is added
        t = np.arange(200)
        clean = 0.5 ** t - 0.9 * 0.25 ** t
        assert np.allclose(clean[2:], 0.75 * clean[1:-1] - 0.125 * clean[:-2],
                           rtol=0, atol=1e-15)
        fit = ar_fit(clean, k=2)
        exact_err = max(abs(fit["phi"][0] - 0.75), abs(fit["phi"][1] + 0.125))

        hits = 0
        power = float(np.mean(clean ** 2))
        sigma = math.sqrt(power / 10 ** (30 / 10))
        for seed in range(100):
            rng = np.random.default_rng(seed)
            noisy = clean + rng.normal(0.0, sigma, len(clean))
            try:
                f = ar_fit(noisy, k=2)
            except ValueError:
                continue
            if abs(f["phi"][0] - 0.75) <= 0.05 and abs(f["phi"][1] + 0.125) <= 0.05:
                hits += 1
        return exact_err, hits

    (exact_err, hits), dt = timed(run)
    ok = exact_err < 1e-6 and hits >= 95 and dt < 10.0
    return report(6, "AR(2) recovery exact and under 30 dB noise", ok,
                  f"noise-free error {exact_err:.2e}, {hits}/100 noisy seeds, {dt:.1f}s")


def test_criterion_06():
    assert criterion_06()


# ---------------------------------------------------------------------------
# 7. detector latency and steady-signal silence
# ---------------------------------------------------------------------------

def criterion_07():
    from relaykit.detector import DetectorConfig, cdf_scan, ed_scan
    from relaykit.waveform import SamplingSpec, ThreePhaseRecord

    spec = SamplingSpec(10_000.0, 60.0)
    n_c = spec.samples_per_cycle
    cfg = DetectorConfig()

    def run():
        rng = np.random.default_rng(707)
        false_trips = 0
        late_or_missed = 0
        for _ in range(100):
            harmonics = [(int(h), float(rng.uniform(0, 0.5)))
                         for h in rng.choice([2, 3, 5, 7, 11], 3, replace=False)]
            t = np.arange(7 * n_c)
            phase = rng.uniform(0, 2 * np.pi)
            amp = rng.uniform(0.2, 20.0)
            x = amp * np.sin(2 * np.pi * t / n_c + phase)
            for h, frac in harmonics:
                x = x + amp * frac * np.sin(2 * np.pi * h * t / n_c + h)
            rec = ThreePhaseRecord(np.stack([x, x, x]), "current", spec)
            if ed_scan(rec, cfg).triggered or cdf_scan(rec, cfg).triggered:
                false_trips += 1

            s = int(rng.integers(3 * n_c, 5 * n_c))
            ratio = rng.uniform(2.0, 10.0)
            y = x.copy()
            y[s:] *= ratio
            rec2 = ThreePhaseRecord(np.stack([y, y, y]), "current", spec)
            for scan in (ed_scan, cdf_scan):
                res = scan(rec2, cfg)
                if not res.triggered or res.trigger_index - s > n_c:
                    late_or_missed += 1
        return false_trips, late_or_missed

    (false_trips, late_or_missed), dt = timed(run)
    ok = false_trips == 0 and late_or_missed == 0 and dt < 30.0
    return report(7, "detector latency under one cycle, silent on periodic mixes", ok,
                  f"{false_trips} false trips, {late_or_missed} late/missed, {dt:.1f}s")


def test_criterion_07():
    assert criterion_07()


# ---------------------------------------------------------------------------
# 8 and 9. end-to-end desk-scale cascade and noise-degradation ordering
# ---------------------------------------------------------------------------

_E2E_CACHE = {}


def _detect_stage_accuracy(snr_db: float):
    from relaykit.corpus import (assemble_stage_datasets, generate_corpus,
                                 scenario_plan, split_records)
    from relaykit.learn import (BoostConfig, balanced_accuracy, confusion_matrix,
                                predict)
    from relaykit.relay import CascadeConfig, build_cascade
    from relaykit.waveform import SamplingSpec

    spec = SamplingSpec(10_000.0, 60.0)
    plan = scenario_plan(per_class=200, seed=2026)
    records = generate_corpus(plan, spec, snr_db=snr_db, noise_seed=7)
    train, test = split_records(records, 0.2, seed=1)
    cfg = CascadeConfig()
    train_data = assemble_stage_datasets(train, cfg, stages=("detect",))
    test_data = assemble_stage_datasets(test, cfg, stages=("detect",))
    trainer = BoostConfig(n_stages=300, learning_rate=0.1, max_depth=3, seed=5)
    model = build_cascade(train_data, cfg, trainer)
    d = test_data["detect"]
    labels, _ = predict(model.models["detect"], d.x)
    return balanced_accuracy(confusion_matrix(d.y, labels, d.n_classes))


def criterion_08():
    from relaykit.corpus import (assemble_stage_datasets, generate_corpus,
                                 scenario_plan, split_records)
    from relaykit.learn import (BoostConfig, balanced_accuracy, confusion_matrix,
                                predict)
    from relaykit.relay import CascadeConfig, build_cascade
    from relaykit.waveform import SamplingSpec

    def run():
        spec = SamplingSpec(10_000.0, 60.0)
        plan = scenario_plan(per_class=200, seed=2026)
        records = generate_corpus(plan, spec, snr_db=30.0, noise_seed=7)
        assert len(records) == 2400
        train, test = split_records(records, 0.2, seed=1)
        cfg = CascadeConfig()
        train_data = assemble_stage_datasets(train, cfg)
        test_data = assemble_stage_datasets(test, cfg)
        trainer = BoostConfig(mode="first_order", n_stages=300, learning_rate=0.1,
                              max_depth=3, seed=5)
        model = build_cascade(train_data, cfg, trainer)
        scores = {}
        for name, d in test_data.items():
            labels, _ = predict(model.models[name], d.x)
            cm = confusion_matrix(d.y, labels, d.n_classes)
            keep = cm.sum(axis=1) > 0
            scores[name] = balanced_accuracy(cm[np.ix_(keep, keep)])
        return scores

    scores, dt = timed(run)
    _E2E_CACHE["scores"] = scores
    ok = (scores.get("detect", 0.0) >= 0.95
          and scores.get("disturbance_type", 0.0) >= 0.90 and dt < 180.0)
    detail = (f"detect {scores.get('detect', 0):.4f}, "
              f"disturbance_type {scores.get('disturbance_type', 0):.4f}, {dt:.0f}s")
    return report(8, "end-to-end cascade on the 2400-record corpus", ok, detail)


def test_criterion_08():
    assert criterion_08()


def criterion_09():
    def run():
        ba_40 = _detect_stage_accuracy(40.0)
        ba_20 = _detect_stage_accuracy(20.0)
        return ba_20, ba_40

    (ba_20, ba_40), dt = timed(run)
    ok = ba_20 <= ba_40
    return report(9, "noise degrades the detect stage monotonically", ok,
                  f"20 dB {ba_20:.4f} <= 40 dB {ba_40:.4f}, {dt:.0f}s")


def test_criterion_09():
    assert criterion_09()


# ---------------------------------------------------------------------------
# 10. Bayesian optimization benchmark
# ---------------------------------------------------------------------------

def criterion_10():
    from relaykit.learn import BoxAxis, SearchSpace, bayes_opt

    def run():
        space = SearchSpace([BoxAxis("z", 0.0, 1.0)])
        hits = 0
        for seed in range(10):
            best, _, _ = bayes_opt(lambda p: -(p["z"] - 0.33) ** 2, space,
                                   n_init=4, n_iter=11, seed=seed)
            if abs(best["z"] - 0.33) <= 0.02:
                hits += 1
        return hits

    hits, dt = timed(run)
    ok = hits == 10 and dt < 10.0
    return report(10, "Bayesian optimization finds the quadratic optimum", ok,
                  f"{hits}/10 seeds within 0.02, {dt:.1f}s")


def test_criterion_10():
    assert criterion_10()


# ---------------------------------------------------------------------------
# 11. fault-model script fidelity
# ---------------------------------------------------------------------------

def _two_winding_oracle(mva, v1, v2, f, im, xl, f1, f2):
    fa, fc = f1 * 0.01, f2 * 0.01
    fb, fd = 1 - fa, 1 - fc
    i1, i2 = mva / v1, mva / v2
    w = 2 * math.pi * f
    lk1, lk2 = xl * (v1 / i1) / w, xl * (v2 / i2) / w
    l1, l2 = v1 / (w * im * i1), v2 / (w * im * i2)
    leak = [lk1 / 2 * fa, lk1 / 2 * fb, lk2 / 2 * fc, lk2 / 2 * fd]
    mag = [l1 * fa ** 2, l1 * fb ** 2, l2 * fc ** 2, l2 * fd ** 2]
    m = np.zeros((4, 4))
    for i in range(4):
        m[i, i] = leak[i] + mag[i]
        for j in range(i + 1, 4):
            m[i, j] = m[j, i] = math.sqrt(mag[i] * mag[j])
    return m


def _three_winding_oracle(mva, v1, v2, v3, f, im, x12, x13, x23, f1, f2, f3):
    fa, fc, fe = f1 * 0.01, f2 * 0.01, f3 * 0.01
    fb, fd, ff = 1 - fa, 1 - fc, 1 - fe
    i = [mva / v1, mva / v2, mva / v3]
    w = 2 * math.pi * f
    xs = [(x13 - x23 + x12) / 2, (x23 - x13 + x12) / 2, (x13 - x12 + x23) / 2]
    lk = [xs[0] * (v1 / i[0]) / w, xs[1] * (v2 / i[1]) / w, xs[2] * (v3 / i[2]) / w]
    l = [v1 / (w * im * i[0]), v2 / (w * im * i[1]), v3 / (w * im * i[2])]
    leak = [lk[0] * fa, lk[0] * fb, lk[1] * fc, lk[1] * fd, lk[2] * fe, lk[2] * ff]
    mag = [l[0] * fa ** 2, l[0] * fb ** 2, l[1] * fc ** 2, l[1] * fd ** 2,
           l[2] * fe ** 2, l[2] * ff ** 2]
    m = np.zeros((6, 6))
    for a in range(6):
        m[a, a] = leak[a] + mag[a]
        for b in range(a + 1, 6):
            m[a, b] = m[b, a] = math.sqrt(mag[a] * mag[b])
    return m


def criterion_11():
    from relaykit.txmodel import (ThreeWindingParams, TwoWindingParams,
                                  WindingFaultSpec, three_winding_matrix,
                                  two_winding_matrix)

    def run():
        rng = np.random.default_rng(1111)
        worst = 0.0
        done2 = done3 = 0
        while done2 < 1000 or done3 < 1000:
            mva = rng.uniform(1, 1000)
            v = rng.uniform(1, 765, 3)
            f = float(rng.choice((50.0, 60.0)))
            im = rng.uniform(0.01, 0.5)
            if done2 < 1000:
                xl = rng.uniform(0.01, 0.3)
                f1, f2 = rng.uniform(0, 100, 2)
                got = two_winding_matrix(TwoWindingParams(mva, v[0], v[1], f, im, xl),
                                         WindingFaultSpec(f1, f2)).entries
                want = _two_winding_oracle(mva, v[0], v[1], f, im, xl, f1, f2)
                worst = max(worst, float(np.abs(got - want).max() / np.abs(want).max()))
                done2 += 1
            if done3 < 1000:
                x12, x13, x23 = rng.uniform(0.02, 0.3, 3)
                if min(x13 - x23 + x12, x23 - x13 + x12, x13 - x12 + x23) >= 0:
                    f1, f2, f3 = rng.uniform(0, 100, 3)
                    p = ThreeWindingParams(mva, v[0], v[1], v[2], f, im, x12, x13, x23)
                    got = three_winding_matrix(p, f1, f2, f3).entries
                    want = _three_winding_oracle(mva, v[0], v[1], v[2], f, im,
                                                 x12, x13, x23, f1, f2, f3)
                    worst = max(worst, float(np.abs(got - want).max() / np.abs(want).max()))
                    done3 += 1
        return worst

    worst, dt = timed(run)
    ok = worst < 1e-12 and dt < 10.0
    return report(11, "fault-model matrices match the literal script oracle", ok,
                  f"worst relative deviation {worst:.2e}, {dt:.1f}s")


def test_criterion_11():
    assert criterion_11()


# ---------------------------------------------------------------------------
# 12. impedance math
# ---------------------------------------------------------------------------

def criterion_12():
    import cmath
    from relaykit.relay import ImpedanceParams, k0_factor, measure_impedance

    def run():
        z1 = cmath.rect(0.189, math.radians(84.0))
        z0 = cmath.rect(1.06, math.radians(84.17))
        p = ImpedanceParams(z1_per_km=z1, z0_per_km=z0, line_km=125.0,
                            ct_ratio=500.0, vt_ratio=2021.0)
        k0 = k0_factor(p)
        k0_oracle = (z0 - z1) / (3 * z1)
        k0_err = abs(k0 - k0_oracle) / abs(k0_oracle)

        i_a = cmath.rect(1.3, math.radians(-75.0))
        i_0 = i_a / 3.0
        v_a = 0.8 * p.line_km * z1 * (i_a + 3 * k0 * i_0)
        z = measure_impedance(v_a, i_a, i_0, p)
        want = 0.8 * p.line_km * abs(z1) * p.secondary_scale
        reach_err = abs(abs(z) - want) / want
        return k0_err, reach_err

    (k0_err, reach_err), dt = timed(run)
    ok = k0_err < 1e-3 and reach_err < 0.005 and dt < 5.0
    return report(12, "zero-sequence compensation and 80 percent reach", ok,
                  f"k0 err {k0_err:.2e}, reach err {reach_err:.2e}, {dt:.2f}s")


def test_criterion_12():
    assert criterion_12()


# ---------------------------------------------------------------------------
# standalone runner
# ---------------------------------------------------------------------------

def main() -> int:
    criteria = [criterion_01, criterion_02, criterion_03, criterion_04,
                criterion_05, criterion_06, criterion_07, criterion_08,
                criterion_09, criterion_10, criterion_11, criterion_12]
    passed = [fn() for fn in criteria]
    print(f"\n{sum(passed)}/{len(passed)} acceptance criteria passed")
    return 0 if all(passed) else 1


if __name__ == "__main__":
    import sys
    sys.exit(main())
