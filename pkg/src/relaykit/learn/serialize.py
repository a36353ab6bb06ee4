"""Versioned JSON serialization of trained models (schema model_v1)."""

from __future__ import annotations

import numpy as np

from .boosting import BoostConfig, BoostedModel
from .forest import ForestConfig, ForestModel
from .simple import KnnConfig, KnnModel, NbModel
from .trees import RegNode, TreeConfig, TreeModel, TreeNode

SCHEMA = "model_v1"


def _class_node_to_dict(node: TreeNode) -> dict:
    out = {"counts": node.counts.tolist(), "impurity": node.impurity}
    if not node.is_leaf:
        out.update(feature=node.feature, threshold=node.threshold,
                   left=_class_node_to_dict(node.left),
                   right=_class_node_to_dict(node.right))
    return out


def _class_node_from_dict(d: dict) -> TreeNode:
    node = TreeNode(counts=np.asarray(d["counts"], dtype=np.float64),
                    impurity=float(d["impurity"]))
    if "feature" in d:
        node.feature = int(d["feature"])
        node.threshold = float(d["threshold"])
        node.left = _class_node_from_dict(d["left"])
        node.right = _class_node_from_dict(d["right"])
    return node


def _reg_node_to_dict(node: RegNode) -> dict:
    if node.is_leaf:
        return {"value": node.value}
    return {"value": node.value, "feature": node.feature, "threshold": node.threshold,
            "left": _reg_node_to_dict(node.left), "right": _reg_node_to_dict(node.right)}


def _reg_node_from_dict(d: dict) -> RegNode:
    node = RegNode(value=float(d["value"]))
    if "feature" in d:
        node.feature = int(d["feature"])
        node.threshold = float(d["threshold"])
        node.left = _reg_node_from_dict(d["left"])
        node.right = _reg_node_from_dict(d["right"])
    return node


def model_to_dict(model) -> dict:
    if isinstance(model, TreeModel):
        return {"schema": SCHEMA, "type": "tree", "n_features": model.n_features,
                "n_classes": model.n_classes, "config": vars(model.config),
                "root": _class_node_to_dict(model.root)}
    if isinstance(model, ForestModel):
        return {"schema": SCHEMA, "type": "forest", "n_features": model.n_features,
                "n_classes": model.n_classes, "config": vars(model.config),
                "trees": [model_to_dict(t) for t in model.trees]}
    if isinstance(model, BoostedModel):
        return {"schema": SCHEMA, "type": "boosted", "n_features": model.n_features,
                "n_classes": model.n_classes, "config": vars(model.config),
                "priors": model.priors.tolist(),
                "stages": [[_reg_node_to_dict(t) for t in stage] for stage in model.stages],
                "train_deviance": list(model.train_deviance)}
    if isinstance(model, KnnModel):
        return {"schema": SCHEMA, "type": "knn", "n_classes": model.n_classes,
                "config": vars(model.config), "x": model.x.tolist(), "y": model.y.tolist()}
    if isinstance(model, NbModel):
        return {"schema": SCHEMA, "type": "nb", "n_classes": model.n_classes,
                "means": model.means.tolist(), "variances": model.variances.tolist(),
                "log_priors": model.log_priors.tolist()}
    raise TypeError(f"cannot serialize {type(model).__name__}")


def model_from_dict(d: dict):
    if d.get("schema") != SCHEMA:
        raise ValueError(f"unsupported model schema {d.get('schema')!r}; expected {SCHEMA}")
    kind = d["type"]
    if kind == "tree":
        return TreeModel(_class_node_from_dict(d["root"]), int(d["n_features"]),
                         int(d["n_classes"]), TreeConfig(**d["config"]))
    if kind == "forest":
        trees = [model_from_dict(t) for t in d["trees"]]
        return ForestModel(trees, int(d["n_features"]), int(d["n_classes"]),
                           ForestConfig(**d["config"]))
    if kind == "boosted":
        model = BoostedModel(priors=np.asarray(d["priors"], dtype=np.float64),
                             stages=[[_reg_node_from_dict(t) for t in stage]
                                     for stage in d["stages"]],
                             n_features=int(d["n_features"]), n_classes=int(d["n_classes"]),
                             config=BoostConfig(**d["config"]))
        model.train_deviance = list(d.get("train_deviance", []))
        return model
    if kind == "knn":
        return KnnModel(np.asarray(d["x"], dtype=np.float64),
                        np.asarray(d["y"], dtype=np.int64), int(d["n_classes"]),
                        KnnConfig(**d["config"]))
    if kind == "nb":
        return NbModel(np.asarray(d["means"]), np.asarray(d["variances"]),
                       np.asarray(d["log_priors"]), int(d["n_classes"]))
    raise ValueError(f"unknown model type {kind!r}")
