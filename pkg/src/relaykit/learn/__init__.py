"""Supervised learners, model selection, resampling, and metrics."""

from .boosting import BoostConfig, BoostedModel, boosted_scores, multinomial_deviance, train_boosted
from .forest import ForestConfig, ForestModel, feature_importances, forest_distributions, train_forest
from .metrics import balanced_accuracy, confusion_matrix, per_class_recall
from .model_select import (BoxAxis, CategoricalAxis, SearchSpace, bayes_opt,
                           cross_validated_accuracy, grid_search, stratified_folds)
from .predict import make_trainer, predict, predict_scores
from .resample import nearmiss, smote
from .serialize import model_from_dict, model_to_dict
from .simple import (KnnConfig, KnnModel, NbModel, knn_distributions, nb_distributions,
                     train_knn, train_nb)
from .trees import (Dataset, TreeConfig, TreeModel, impurity, split_gain, train_tree,
                    tree_distributions)

__all__ = [
    "BoostConfig", "BoostedModel", "BoxAxis", "CategoricalAxis", "Dataset",
    "ForestConfig", "ForestModel", "KnnConfig", "KnnModel", "NbModel", "SearchSpace",
    "balanced_accuracy", "bayes_opt", "boosted_scores", "confusion_matrix",
    "cross_validated_accuracy", "feature_importances", "forest_distributions",
    "grid_search", "impurity", "knn_distributions", "make_trainer", "model_from_dict",
    "model_to_dict", "multinomial_deviance", "nb_distributions", "nearmiss",
    "per_class_recall", "predict", "predict_scores", "smote", "split_gain", "TreeConfig", "TreeModel",
    "stratified_folds", "train_boosted", "train_forest", "train_knn", "train_nb",
    "train_tree", "tree_distributions",
]
