#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "tube/error.hpp"
#include "tube/zoo/variety.hpp"

namespace tube::app {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class BaseKind { kQuadric, kSegre, kVeronese, kPluecker, kSpinor, kSeveri, kSympl };

struct ParsedSpec {
  BaseKind kind{};
  std::size_t a = 0, b = 0;  // quadric/veronese/pluecker: a = n; segre: a x b; sympl: k, m
  std::vector<QVector> projection;  // generators of L, empty when not projected
  zoo::ParamVariety variety;
  // Closed-form dim aut^(1) when one is known, with the statement it comes from.
  std::optional<long> expected;
  std::string anchor;
};

// Grammar:
//   spec := base | "project(" base (";" vector)* ")"
//   base := "quadric:" n | "segre:" a "x" b | "veronese:" n | "pluecker:" n
//         | "spinor:5" | "severi" | "sympl:" k "," m
//   vector := rational ("," rational)*
// Projections check L against X (and its secant variety, except for sympl).
ParsedSpec parse_spec(std::string_view text, std::uint64_t seed = 1);

// Closed forms for the projected models, from the image and kernel profile of L.
long segre_projection_dim(std::size_t a, std::size_t b, const std::vector<QVector>& l);
long veronese_projection_dim(std::size_t n, const std::vector<QVector>& l);
long pluecker_projection_dim(std::size_t n, const std::vector<QVector>& l);
long sympl_projection_dim(std::size_t k, std::size_t m, const std::vector<QVector>& l);

}  // namespace tube::app
