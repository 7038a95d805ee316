"""Operating points of the two published CHSH curves and related targets."""

from dataclasses import dataclass
import math

from .observables import BasisParams


@dataclass(frozen=True)
class Preset:
    state: str
    alpha: float
    beta: float
    rule: str
    params: BasisParams
    vary: str = "gamma1"
    target: float | None = None
    tol: float | None = None


# gamma1 in the fixed params is the argmax of a 1001-point sweep; the
# published curves only fix the other seven values.
FIG1 = Preset(
    "entangled", math.pi / 4, math.pi / 4, "von-neumann",
    BasisParams.from_names(eta1=0.98, gamma1=0.981, eta1p=0.20, gamma1p=0.20,
                           eta2=0.83, gamma2=0.83, eta2p=0.57, gamma2p=0.57),
    target=3.41, tol=0.02,
)
FIG2 = Preset(
    "product", 0.0, math.pi / 4, "von-neumann",
    BasisParams.from_names(eta1=0.20, gamma1=0.831, eta1p=0.55, gamma1p=0.0,
                           eta2=0.85, gamma2=0.85, eta2p=0.0, gamma2p=0.55),
    target=2.63, tol=0.02,
)
TSIRELSON = Preset("entangled", math.pi / 4, math.pi / 4, "lueders", BasisParams(),
                   target=2 * math.sqrt(2), tol=1e-9)
PRODUCT_LUEDERS = Preset("product", 0.0, math.pi / 4, "lueders", BasisParams(),
                         target=math.sqrt(2), tol=1e-9)

PRESETS = {
    "fig1": FIG1,
    "fig2": FIG2,
    "tsirelson": TSIRELSON,
    "product-lueders": PRODUCT_LUEDERS,
}
