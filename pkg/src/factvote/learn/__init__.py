"""From-scratch classifier suite with a fit/predict estimator interface."""

from factvote.learn.base import BaseEstimator, clone
from factvote.learn.bayes import GaussianNB
from factvote.learn.ensemble import BaggingClassifier, VotingClassifier
from factvote.learn.forest import RandomForestClassifier
from factvote.learn.linear import (
    LinearSVM,
    LogisticRegression,
    SGDClassifier,
    hinge_loss,
    hinge_subgradient,
    logistic_gradient,
    logistic_loss,
)
from factvote.learn.neighbors import KNeighborsClassifier
from factvote.learn.persistence import (
    FORMAT_VERSION,
    load_model,
    model_from_dict,
    model_to_dict,
    save_model,
)
from factvote.learn.preprocessing import SIGMA_FLOOR, Standardizer
from factvote.learn.train import (
    SIMPLE_KINDS,
    LabeledInstance,
    TrainConfig,
    build_estimator,
    instances_to_arrays,
    parse_model_spec,
    train_bagging,
    train_cart,
    train_gnb,
    train_knn,
    train_linear_svm,
    train_logistic,
    train_model,
    train_random_forest,
    train_sgd,
    train_voting,
)
from factvote.learn.tree import DecisionTreeClassifier
from factvote.learn.validation import check_array, check_is_fitted, check_X_y

__all__ = [
    "BaseEstimator",
    "clone",
    "Standardizer",
    "SIGMA_FLOOR",
    "LogisticRegression",
    "LinearSVM",
    "SGDClassifier",
    "DecisionTreeClassifier",
    "RandomForestClassifier",
    "KNeighborsClassifier",
    "GaussianNB",
    "VotingClassifier",
    "BaggingClassifier",
    "logistic_loss",
    "logistic_gradient",
    "hinge_loss",
    "hinge_subgradient",
    "FORMAT_VERSION",
    "save_model",
    "load_model",
    "model_to_dict",
    "model_from_dict",
    "LabeledInstance",
    "TrainConfig",
    "SIMPLE_KINDS",
    "build_estimator",
    "parse_model_spec",
    "instances_to_arrays",
    "train_model",
    "train_logistic",
    "train_linear_svm",
    "train_sgd",
    "train_cart",
    "train_random_forest",
    "train_knn",
    "train_gnb",
    "train_voting",
    "train_bagging",
    "check_array",
    "check_X_y",
    "check_is_fitted",
]
