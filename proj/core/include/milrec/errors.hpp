#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace milrec {

// Structural reasons for refusing an input. These are verdicts about the
// data, not programming errors; precondition violations and malformed
// arguments throw std::invalid_argument instead.
enum class Reject {
    NoUnit,
    NotLocal,
    NotGorenstein,
    BadAmbientDim,
    NuNotDivisible,
    DimensionMismatch,
    KernelDimMismatch,
    NotFiniteAtOrigin,
    NotFinite,
    NotHomogeneous,
    NotClosed,
    NotInSpan,
    NoNondegenerateSolution,
    DegenerateCubic,
    HessePencilDegenerate,
    InvariantMismatch,
};

constexpr std::string_view to_string(Reject r) {
    switch (r) {
        case Reject::NoUnit: return "NoUnit";
        case Reject::NotLocal: return "NotLocal";
        case Reject::NotGorenstein: return "NotGorenstein";
        case Reject::BadAmbientDim: return "BadAmbientDim";
        case Reject::NuNotDivisible: return "NuNotDivisible";
        case Reject::DimensionMismatch: return "DimensionMismatch";
        case Reject::KernelDimMismatch: return "KernelDimMismatch";
        case Reject::NotFiniteAtOrigin: return "NotFiniteAtOrigin";
        case Reject::NotFinite: return "NotFinite";
        case Reject::NotHomogeneous: return "NotHomogeneous";
        case Reject::NotClosed: return "NotClosed";
        case Reject::NotInSpan: return "NotInSpan";
        case Reject::NoNondegenerateSolution: return "NoNondegenerateSolution";
        case Reject::DegenerateCubic: return "DegenerateCubic";
        case Reject::HessePencilDegenerate: return "HessePencilDegenerate";
        case Reject::InvariantMismatch: return "InvariantMismatch";
    }
    return "Unknown";
}

class RejectError : public std::runtime_error {
  public:
    RejectError(Reject reason, const std::string& detail)
        : std::runtime_error(std::string(to_string(reason)) + ": " + detail),
          reason_(reason), detail_(detail) {}

    Reject reason() const { return reason_; }
    const std::string& detail() const { return detail_; }

  private:
    Reject reason_;
    std::string detail_;
};

}  // namespace milrec
