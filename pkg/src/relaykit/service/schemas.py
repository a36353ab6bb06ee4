"""Request and response models of the service; the CLI ships these same
payloads as JSON configs."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, field_validator

from ..corpus import CORPUS_CLASSES

REPORT_SCHEMA = "report_v1"


class SamplingModel(BaseModel):
    sample_rate_hz: float = 10_000.0
    nominal_freq_hz: float = 60.0

    @field_validator("sample_rate_hz", "nominal_freq_hz")
    @classmethod
    def positive(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("must be positive")
        return v


class TrainerModel(BaseModel):
    mode: str = "first_order"
    n_stages: int = Field(300, ge=0)
    learning_rate: float = Field(0.1, ge=0.0)
    max_depth: int = Field(3, ge=1)
    subsample: float = Field(1.0, gt=0.0, le=1.0)
    gamma: float = Field(0.0, ge=0.0)
    lam: float = Field(1.0, ge=0.0)


class GenRequest(BaseModel):
    out_dir: str
    per_class: int = Field(200, ge=0)
    classes: tuple = CORPUS_CLASSES
    seed: int = 0
    snr_db: Optional[float] = None       # None means noise-free
    sampling: SamplingModel = SamplingModel()
    #: explicit scenario batch (list of scenario objects); when given it
    #: replaces the per_class/classes plan
    scenarios: Optional[list] = None

    @field_validator("classes")
    @classmethod
    def known_classes(cls, v):
        unknown = [c for c in v if c not in CORPUS_CLASSES]
        if unknown:
            raise ValueError(f"unknown corpus classes: {unknown}")
        return tuple(v)


class GenReport(BaseModel):
    schema_name: str = REPORT_SCHEMA
    config_hash: str
    out_dir: str
    n_records: int
    class_counts: dict
    files: list


class FeaturesRequest(BaseModel):
    corpus_dir: str
    out_path: str
    stage: str = "detect"
    seed: int = 0


class FeaturesReport(BaseModel):
    schema_name: str = REPORT_SCHEMA
    config_hash: str
    out_path: str
    stage: str
    n_rows: int
    n_skipped: int
    feature_names: list


class TrainRequest(BaseModel):
    corpus_dir: str
    model_path: str
    stages: Optional[tuple] = None       # None trains every stage with data
    trainer: TrainerModel = TrainerModel()
    cv_folds: int = Field(0, ge=0)
    seed: int = 0


class TrainReport(BaseModel):
    schema_name: str = REPORT_SCHEMA
    config_hash: str
    model_path: str
    stages: dict                          # stage -> {rows, classes, cv_score}
    train_seconds: float


class EvalRequest(BaseModel):
    corpus_dir: str
    model_path: str
    out_path: Optional[str] = None
    seed: int = 0


class StageMetrics(BaseModel):
    confusion: list
    classes: list
    balanced_accuracy: float
    per_class_recall: list
    n_rows: int


class EvalReport(BaseModel):
    schema_name: str = REPORT_SCHEMA
    config_hash: str
    stages: dict                          # stage -> StageMetrics payload


class ClassifyRequest(BaseModel):
    corpus_dir: str
    model_path: str
    limit: Optional[int] = Field(None, ge=1)


class ClassifyReport(BaseModel):
    schema_name: str = REPORT_SCHEMA
    config_hash: str
    n_records: int
    decisions: list
