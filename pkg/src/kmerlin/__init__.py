"""Alignment-free nucleotide sequence classification with k-mer linear models."""

__version__ = "0.1.0"

from .seq_io import (
    Fragment,
    LabeledDataset,
    Sequence,
    load_labels,
    parse_fasta,
    sample_fragments,
    write_fasta,
)
from .kmer_features import (
    KmerProfile,
    KmerSpec,
    PairedProfile,
    ProfileMatrix,
    build_matrix,
    build_paired_profile,
    build_profile,
    kmer_index,
)
from .models_generative import (
    MarkovChainModel,
    MultinomialBayesModel,
    SmoothingPolicy,
    fit_markov,
    fit_multinomial_bayes,
)
from .models_discriminative import (
    BinaryLinearModel,
    OneVsRestModel,
    Penalty,
    fit_binary,
    fit_ovr,
)
from .evaluation import (
    ClassifierConfig,
    GridConfig,
    default_model_grid,
    evaluate_complete,
    evaluate_fragments,
    make_folds,
    run_grid,
    weighted_f_measure,
)

__all__ = [
    "Sequence",
    "LabeledDataset",
    "Fragment",
    "parse_fasta",
    "write_fasta",
    "load_labels",
    "sample_fragments",
    "KmerSpec",
    "KmerProfile",
    "PairedProfile",
    "ProfileMatrix",
    "kmer_index",
    "build_profile",
    "build_paired_profile",
    "build_matrix",
    "SmoothingPolicy",
    "MultinomialBayesModel",
    "MarkovChainModel",
    "fit_multinomial_bayes",
    "fit_markov",
    "Penalty",
    "BinaryLinearModel",
    "OneVsRestModel",
    "fit_binary",
    "fit_ovr",
    "ClassifierConfig",
    "GridConfig",
    "default_model_grid",
    "make_folds",
    "weighted_f_measure",
    "evaluate_complete",
    "evaluate_fragments",
    "run_grid",
]
