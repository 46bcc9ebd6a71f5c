"""Word-length spectrum analytics.

Fits the displaced-Poisson word-length mixture with a uniformly
distributed parameter to texts, derives the language invariant I and the
genre invariant alpha, and places texts in the I/alpha plane.  See the
individual modules: rules (tokenization/syllables), spectrum (rank and
length spectra), model (distribution and invariant algebra), estimate
(parameter fitting), synth (seeded generators), corpus (batch analysis and
classification), plotting (SVG scatter), cli.
"""

from wordlength._backend import BACKEND_NAME
from wordlength.corpus import (
    ClassifyResult,
    GroupMeans,
    ManifestEntry,
    ReferenceTable,
    TextResult,
    analyze_corpus,
    analyze_text,
    classify,
    group_means,
    load_manifest,
    load_reference_table,
    read_results,
    write_results,
)
from wordlength.errors import (
    DegenerateSpectrumError,
    DomainError,
    DuplicateIdError,
    EmptyResultsError,
    EmptyTableError,
    EmptyTextError,
    ManifestError,
    RulePackError,
    UnknownGroupError,
    UnknownLanguageError,
    WordlengthError,
)
from wordlength.estimate import (
    FitResult,
    estimate_lambda0,
    estimate_lambda1,
    fit_spectrum,
    fit_text,
    goodness_of_fit,
)
from wordlength.model import (
    DEFAULT_LAMBDA1_MIN,
    Invariants,
    MixtureSpec,
    ModelParams,
    compute_invariants,
    conditional_mean,
    mixture_pmf,
    params_from_invariants,
    shifted_poisson_pmf,
)
from wordlength.plotting import PlotConfig, plot_plane, write_plot
from wordlength.rules import (
    LanguageRules,
    TokenStream,
    available_languages,
    count_syllables,
    load_rules,
    load_rules_file,
    tokenize,
)
from wordlength.spectrum import (
    LengthSpectrum,
    RankEntry,
    RankSpectrum,
    build_rank_spectrum,
    length_spectrum,
    write_spectrum_csv,
)
from wordlength.synth import (
    SynthConfig,
    generate_rank_spectrum,
    sample_lengths,
    write_pseudo_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "DEFAULT_LAMBDA1_MIN",
    "ClassifyResult",
    "DegenerateSpectrumError",
    "DomainError",
    "DuplicateIdError",
    "EmptyResultsError",
    "EmptyTableError",
    "EmptyTextError",
    "FitResult",
    "GroupMeans",
    "Invariants",
    "LanguageRules",
    "LengthSpectrum",
    "ManifestEntry",
    "ManifestError",
    "MixtureSpec",
    "ModelParams",
    "PlotConfig",
    "RankEntry",
    "RankSpectrum",
    "ReferenceTable",
    "RulePackError",
    "SynthConfig",
    "TextResult",
    "TokenStream",
    "UnknownGroupError",
    "UnknownLanguageError",
    "WordlengthError",
    "analyze_corpus",
    "analyze_text",
    "available_languages",
    "build_rank_spectrum",
    "classify",
    "compute_invariants",
    "conditional_mean",
    "count_syllables",
    "estimate_lambda0",
    "estimate_lambda1",
    "fit_spectrum",
    "fit_text",
    "generate_rank_spectrum",
    "goodness_of_fit",
    "group_means",
    "length_spectrum",
    "load_manifest",
    "load_reference_table",
    "load_rules",
    "load_rules_file",
    "mixture_pmf",
    "params_from_invariants",
    "plot_plane",
    "read_results",
    "sample_lengths",
    "shifted_poisson_pmf",
    "tokenize",
    "write_plot",
    "write_pseudo_corpus",
    "write_results",
    "write_spectrum_csv",
]
