#pragma once

#include <stdexcept>
#include <string>

namespace lcs {

// All library errors derive from Error so callers can catch one base type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidComplex : Error {
    explicit InvalidComplex(const std::string& msg) : Error("InvalidComplex: " + msg) {}
};
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error("DimensionError: " + msg) {}
};
struct NotPseudomanifold : Error {
    explicit NotPseudomanifold(const std::string& msg) : Error("NotPseudomanifold: " + msg) {}
};
struct FaceNotFound : Error {
    explicit FaceNotFound(const std::string& msg) : Error("FaceNotFound: " + msg) {}
};
struct VertexClash : Error {
    explicit VertexClash(const std::string& msg) : Error("VertexClash: " + msg) {}
};
struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& msg) : Error("UnsupportedDimension: " + msg) {}
};
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error("InvalidInput: " + msg) {}
};
struct InvalidSubcomplex : Error {
    explicit InvalidSubcomplex(const std::string& msg) : Error("InvalidSubcomplex: " + msg) {}
};
struct IllegalCollapse : Error {
    explicit IllegalCollapse(const std::string& msg) : Error("IllegalCollapse: " + msg) {}
};
struct InvalidKillingSequence : Error {
    explicit InvalidKillingSequence(const std::string& msg) : Error("InvalidKillingSequence: " + msg) {}
};
struct InvalidTree : Error {
    explicit InvalidTree(const std::string& msg) : Error("InvalidTree: " + msg) {}
};
struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& msg)
        : Error("InternalInvariantViolation: " + msg) {}
};

// Legality failures of local-construction moves carry a machine-readable reason.
struct IllegalMove : Error {
    enum class Reason {
        same_simplex,
        adjacent_simplices,
        double_ridge,
        not_boundary,
        missing_shared_cell,
        degenerates_simplex,
    };
    Reason reason;
    IllegalMove(Reason r, const std::string& msg)
        : Error("IllegalMove(" + reason_name(r) + "): " + msg), reason(r) {}
    static std::string reason_name(Reason r) {
        switch (r) {
            case Reason::same_simplex: return "same-simplex";
            case Reason::adjacent_simplices: return "adjacent-simplices";
            case Reason::double_ridge: return "double-ridge";
            case Reason::not_boundary: return "not-boundary";
            case Reason::missing_shared_cell: return "missing-shared-cell";
            case Reason::degenerates_simplex: return "degenerates-simplex";
        }
        return "unknown";
    }
};

struct NotSimplicial : Error {
    explicit NotSimplicial(const std::string& msg) : Error("NotSimplicial: " + msg) {}
};
struct InvalidGluing : Error {
    explicit InvalidGluing(const std::string& msg) : Error("InvalidGluing: " + msg) {}
};
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("ParseError (line " + std::to_string(line_) + "): " + msg), line(line_) {}
};
struct NotFound : Error {
    explicit NotFound(const std::string& msg) : Error("NotFound: " + msg) {}
};

}  // namespace lcs
