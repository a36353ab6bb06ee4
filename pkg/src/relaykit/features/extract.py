"""Assembly of per-record feature vectors from the registered feature sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from ..waveform import ThreePhaseRecord
from . import spectral, stats, wavelets
from .spectral import WelchConfig
from .wavelets import WaveletSpec

FEATURE_SETS = ("td5", "we6", "wc", "f5", "swing6", "ar_relay")

#: default wavelet-energy set; the two impractically long selections are
#: substituted by the closest supported members of the same families and db4
#: fills the sixth slot
DEFAULT_WE_WAVELETS = ("rbio3.1", "sym10", "bior3.9", "rbio3.9", "coif4", "db4")

PHASE_TAGS = ("phA", "phB", "phC")


@dataclass(frozen=True)
class FeatureConfig:
    """Which feature set to extract and the knobs of its members."""

    set: str = "td5"
    wavelet: WaveletSpec | None = None
    change_quantile_bounds: tuple = ((0.4, 0.8), (0.2, 0.8))
    ar_lag: int = 10
    fft_bins: tuple = (2,)
    welch: WelchConfig = field(default_factory=WelchConfig)
    welch_bins: tuple = (2,)
    trend_chunk_lens: tuple = (10,)
    trend_attr: str = "slope"
    trend_agg: str = "mean"
    ar_coef_indices: tuple = (2,)
    ar_relay_coef: int = 2
    entropy_m: int = 2
    entropy_r_factor: float = 0.2
    we_wavelets: tuple = DEFAULT_WE_WAVELETS

    def __post_init__(self):
        if self.set not in FEATURE_SETS:
            raise ValueError(f"unknown feature set {self.set!r}")
        for ql, qh in self.change_quantile_bounds:
            if not 0.0 <= ql < qh <= 1.0:
                raise ValueError(f"bad quantile corridor ({ql}, {qh})")
        if self.ar_lag < 1:
            raise ValueError("ar_lag must be at least 1")
        if self.set == "wc" and self.wavelet is None:
            raise ValueError("set 'wc' needs an explicit wavelet spec")
        if self.set == "ar_relay" and not 1 <= self.ar_relay_coef <= self.ar_lag:
            raise ValueError("ar_relay_coef must lie within the AR lag order")


@dataclass(frozen=True)
class FeatureVector:
    """Named feature values for one record; degraded lists features that were
    undefined on this input and emitted as zero."""

    names: tuple
    values: np.ndarray
    degraded: tuple = ()

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        if len(self.names) != len(vals):
            raise ValueError("names and values must align")
        if len(set(self.names)) != len(self.names):
            raise ValueError("feature names must be unique")
        if not np.isfinite(vals).all():
            raise ValueError("feature values must be finite")
        object.__setattr__(self, "values", vals)

    def as_dict(self) -> dict:
        return dict(zip(self.names, self.values.tolist()))


class _Collector:
    def __init__(self):
        self.names: list[str] = []
        self.values: list[float] = []
        self.degraded: list[str] = []

    def add(self, name: str, fn):
        try:
            value = float(fn())
        except ValueError:
            self.degraded.append(name)
            value = 0.0
        self.names.append(name)
        self.values.append(value)

    def done(self) -> FeatureVector:
        return FeatureVector(tuple(self.names), np.asarray(self.values),
                             tuple(self.degraded))


def normalized_for_ar(x: np.ndarray) -> np.ndarray:
    """Mean-removed, peak-normalized copy; makes AR features unit-independent."""
    y = np.asarray(x, dtype=np.float64) - float(np.mean(x))
    peak = float(np.max(np.abs(y)))
    return y / peak if peak > 0 else y


def extract(record: ThreePhaseRecord, cfg: FeatureConfig,
            voltage: ThreePhaseRecord | None = None) -> FeatureVector:
    """Per-phase features concatenated in phase order a, b, c.

    The swing6 set reads voltage spectra and current trends and therefore
    requires the matching voltage record.
    """
    n = record.n_samples
    col = _Collector()

    if cfg.set == "swing6":
        if voltage is None:
            raise ValueError("swing6 needs the matching voltage record")
        if voltage.n_samples != n:
            raise ValueError("voltage record length differs from current record")
        bin_idx = cfg.fft_bins[0]
        for tag, v in zip(PHASE_TAGS, voltage.phases):
            _need(bin_idx <= n // 2, f"{tag}.vfft.k{bin_idx}", n)
            col.add(f"{tag}.vfft.k{bin_idx}",
                    lambda v=v: np.abs(spectral.fft_coefficients(v)[bin_idx]))
        chunk = cfg.trend_chunk_lens[0]
        for tag, x in zip(PHASE_TAGS, record.phases):
            _need(n >= chunk, f"{tag}.itrend.c{chunk}", n)
            col.add(f"{tag}.itrend.c{chunk}",
                    lambda x=x: spectral.linear_trend(x, chunk, "slope", cfg.trend_agg))
        return col.done()

    for tag, x in zip(PHASE_TAGS, record.phases):
        if cfg.set == "td5":
            ql, qh = cfg.change_quantile_bounds[0]
            _need(n >= 2, f"{tag}.change_quantile", n)
            col.add(f"{tag}.change_quantile", lambda x=x: stats.change_quantile(x, ql, qh))
            _need(n > cfg.entropy_m + 1, f"{tag}.sample_entropy", n)
            col.add(f"{tag}.sample_entropy",
                    lambda x=x: stats.sample_entropy(
                        x, cfg.entropy_m, cfg.entropy_r_factor * float(np.std(x))))
            col.add(f"{tag}.excess_kurtosis", lambda x=x: stats.excess_kurtosis(x))
            col.add(f"{tag}.variance", lambda x=x: stats.variance(x))
            col.add(f"{tag}.cid", lambda x=x: stats.complexity_invariant_distance(x))
        elif cfg.set == "we6":
            for name in cfg.we_wavelets:
                _need(n >= wavelets.filter_length(name), f"{tag}.we.{name}", n)
                col.add(f"{tag}.we.{name}", lambda x=x, name=name:
                        wavelets.total_detail_energy(x, name))
        elif cfg.set == "wc":
            spec = cfg.wavelet
            _need(n >= wavelets.filter_length(spec.name), f"{tag}.wc.{spec.name}", n)
            res = wavelets.dwt(x, spec)
            for i, v in enumerate(res.details[-1]):
                col.add(f"{tag}.wc.{spec.name}.l{spec.level}.k{i}", lambda v=v: v)
        elif cfg.set == "f5":
            for ql, qh in cfg.change_quantile_bounds:
                _need(n >= 2, f"{tag}.change_q.{ql}_{qh}", n)
                col.add(f"{tag}.change_q.{ql}_{qh}",
                        lambda x=x, ql=ql, qh=qh: stats.change_quantile(x, ql, qh))
            for k in cfg.fft_bins:
                _need(k <= n // 2, f"{tag}.fft.k{k}", n)
                col.add(f"{tag}.fft.k{k}",
                        lambda x=x, k=k: np.abs(spectral.fft_coefficients(x)[k]))
            for chunk in cfg.trend_chunk_lens:
                _need(n >= chunk, f"{tag}.trend.c{chunk}", n)
                col.add(f"{tag}.trend.c{chunk}",
                        lambda x=x, chunk=chunk: spectral.linear_trend(
                            x, chunk, cfg.trend_attr, cfg.trend_agg))
            for k in cfg.welch_bins:
                _need(n >= cfg.welch.segment_len, f"{tag}.welch.k{k}", n)
                col.add(f"{tag}.welch.k{k}",
                        lambda x=x, k=k: welch_bin(x, cfg.welch, k))
            for idx in cfg.ar_coef_indices:
                _need(n >= cfg.ar_lag + 2, f"{tag}.arcoef.k{cfg.ar_lag}.phi{idx}", n)
                col.add(f"{tag}.arcoef.k{cfg.ar_lag}.phi{idx}",
                        lambda x=x, idx=idx: _ar_coef(x, cfg.ar_lag, idx))
        elif cfg.set == "ar_relay":
            _need(n >= cfg.ar_lag + 2, f"{tag}.arcoef.k{cfg.ar_lag}.phi{cfg.ar_relay_coef}", n)
            col.add(f"{tag}.arcoef.k{cfg.ar_lag}.phi{cfg.ar_relay_coef}",
                    lambda x=x: _ar_coef(x, cfg.ar_lag, cfg.ar_relay_coef))
    return col.done()


def _need(cond: bool, feature: str, n: int):
    if not cond:
        raise ValueError(f"record too short ({n} samples) for feature {feature}")


def _ar_coef(x, lag: int, idx: int) -> float:
    fit = spectral.ar_fit(normalized_for_ar(x), lag, with_intercept=False)
    return float(fit["phi"][idx - 1])


def welch_bin(x, cfg: WelchConfig, k: int) -> float:
    psd = spectral.welch_density(x, cfg)
    if k >= len(psd):
        raise ValueError(f"welch bin {k} outside the {len(psd)}-bin density")
    return float(psd[k])


def write_feature_csv(path, vectors: Sequence[FeatureVector],
                      labels: Sequence[str]) -> None:
    """Feature matrix as CSV: header of feature names plus label, one row per record."""
    if len(vectors) != len(labels):
        raise ValueError("one label per feature vector required")
    if not vectors:
        raise ValueError("nothing to write")
    names = vectors[0].names
    for v in vectors:
        if v.names != names:
            raise ValueError("all vectors must share one feature set")
    lines = [",".join(list(names) + ["label"])]
    for v, lbl in zip(vectors, labels):
        lines.append(",".join(f"{x:.17g}" for x in v.values) + f",{lbl}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
