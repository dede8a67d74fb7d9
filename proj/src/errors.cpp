#include "microkin/errors.hpp"

namespace microkin {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonSquareSolder: return "NonSquareSolder";
    case Errc::DegenerateSolder: return "DegenerateSolder";
    case Errc::NegativeSquare: return "NegativeSquare";
    case Errc::Singular: return "Singular";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::GridTooSmall: return "GridTooSmall";
    case Errc::PathOutsideGrid: return "PathOutsideGrid";
    case Errc::AffineConnectionNotSupported: return "AffineConnectionNotSupported";
    case Errc::NotMicroLinear: return "NotMicroLinear";
    case Errc::KernelDimMismatch: return "KernelDimMismatch";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::InadmissibleParams: return "InadmissibleParams";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::Io: return "Io";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace microkin
