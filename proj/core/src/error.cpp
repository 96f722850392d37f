#include "opxlab/error.hpp"

namespace opxlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnimodularCoefficient: return "UnimodularCoefficient";
    case Errc::LargeTailCoefficient: return "LargeTailCoefficient";
    case Errc::InvalidTail: return "InvalidTail";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::DegreeExceedsN: return "DegreeExceedsN";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::ZeroOnOrOutsideDisk: return "ZeroOnOrOutsideDisk";
    case Errc::UnsupportedTail: return "UnsupportedTail";
    case Errc::PoleOfF: return "PoleOfF";
    case Errc::SingularNode: return "SingularNode";
    case Errc::PoleAtOrigin: return "PoleAtOrigin";
    case Errc::QuadratureStall: return "QuadratureStall";
    case Errc::PoleEncountered: return "PoleEncountered";
    case Errc::NearZeroDenominator: return "NearZeroDenominator";
    case Errc::NonRealCoefficients: return "NonRealCoefficients";
    case Errc::NotSymmetricLaurent: return "NotSymmetricLaurent";
    case Errc::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case Errc::ZeroC: return "ZeroC";
    case Errc::TruncationNotConverged: return "TruncationNotConverged";
    case Errc::SingularShift: return "SingularShift";
    case Errc::InsufficientMoments: return "InsufficientMoments";
    case Errc::Io: return "Io";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace opxlab
