"""Carrying simplices of competitive maps: criteria, computation, verification."""

from .cone import (
    OrderInterval,
    Ordering,
    RadialCoords,
    compare,
    componentwise_max,
    leq,
    radial_project,
    strictly_less_all,
    strictly_majorizes,
    support,
)
from .criteria import (
    CompetitionModel,
    ConditionResult,
    CriteriaReport,
    competition_matrix,
    gershgorin_col_check,
    gershgorin_row_check,
    power_iteration,
    run_criteria,
    spectral_radius,
    spectral_radius_charpoly,
)
from .modelio import LoadedModel, ModelFileError, load_model_dict, load_model_file
from .models import (
    LeslieGowerModel,
    MayOsterModel,
    ModelEvaluationError,
    ModelParameterError,
    NeuralNetModel,
    ShiftedSoftplus,
)
from .periodic import (
    FourierSeries,
    IntegrationConfig,
    PeriodicLVSystem,
    PoincareMapModel,
    Trajectory,
    check_a_conditions,
    integrate,
    poincare_map,
    wang_jiang_check,
)
from .simplex import (
    RadialSurface,
    SimplexGrid,
    SurfaceDegeneracyError,
    asymptotic_check,
    compute_attractor_cloud,
    compute_carrying_simplex,
    invariance_residual,
    sweep_1d,
    unordered_check,
    verify_surface,
)

__version__ = "0.1.0"
