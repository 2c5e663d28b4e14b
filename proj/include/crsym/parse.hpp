#ifndef CRSYM_PARSE_HPP
#define CRSYM_PARSE_HPP

#include <optional>
#include <string>

#include "crsym/fields.hpp"

namespace crsym {

/// Parses a real polynomial expression in z1, z2 (zb1/zb2 accepted),
/// with Re/Im/conj, rational literals, i, + - * / ^ and parentheses.
/// Throws ParseError (SyntaxError), NotReal, WIllegal.
Poly parse_real_poly(const std::string& src);

/// Parses a vector field expression: the polynomial grammar extended by
/// w and the markers d/dz1, d/dz2, d/dw.  Throws ParseError,
/// AntiholomorphicCoefficient.
VectorField parse_field(const std::string& src);

/// Model file: one real polynomial expression, optionally preceded by a
/// line "weights: p/q, r/s".
struct ModelFile {
    std::optional<Weight> weight;
    Poly poly;
};

ModelFile parse_model_file(const std::string& text);

} // namespace crsym

#endif
