#include "deltaring/errors.hpp"

namespace deltaring {

AxiomViolation::AxiomViolation(std::string kind, std::array<std::size_t, 3> witness)
    : RingError("ring axiom violated: " + kind + " at (" + std::to_string(witness[0]) + ", " +
                std::to_string(witness[1]) + ", " + std::to_string(witness[2]) + ")"),
      kind_(std::move(kind)),
      witness_(witness) {}

HomViolation::HomViolation(std::string kind, std::size_t a, std::size_t b)
    : RingError("not a ring homomorphism: " + kind + " fails at (" + std::to_string(a) + ", " +
                std::to_string(b) + ")"),
      kind_(std::move(kind)),
      a_(a),
      b_(b) {}

OrderGuardExceeded::OrderGuardExceeded(std::size_t requested, std::size_t limit)
    : RingError("construction of order " + std::to_string(requested) + " exceeds the order guard " +
                std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

SyntaxError::SyntaxError(std::size_t position, std::string expected)
    : RingError("syntax error at position " + std::to_string(position) + ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace deltaring
