#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tube/app/report.hpp"
#include "tube/aut/aut.hpp"
#include "tube/euler/symbol_system.hpp"

namespace tube::app {

aut::ProlongConfig prolong_config(const RunConfig& cfg, const std::string& row_name);

// Dimensions [aut, aut^(1), ..., aut^(order)] of one variety spec.
Report cmd_prolong(const std::string& spec, int order, const RunConfig& cfg);
// aut by sampling, cross-checked against the quadric ideal and bracket closure.
Report cmd_aut(const std::string& spec, const RunConfig& cfg);
// dim aut^(1) = dim X over the IHSS list; spinor:5 and severi need cfg.large.
Report cmd_identity_table(const RunConfig& cfg);
std::vector<std::string> identity_table_specs(bool large);

// type like "E7"; without a node every node of the diagram gets a row.
Report cmd_classify(const std::string& type, std::optional<int> node, std::optional<int> beta, const RunConfig& cfg);
Report cmd_tube_types(int max_rank, const RunConfig& cfg);
// Family label of a tube-type marked diagram, empty if it belongs to none.
std::string tube_family(char type, int rank, int node);

// Projected VMRT families whose aut^(1) bound is checked on a grid.
enum class GridFamily { kSympl, kSegre, kPluecker, kVeronese };
std::string family_name(GridFamily family);
// sympl, segre, pluecker, veronese; also the numeric selectors 10..13 of the
// original command line. Throws BadDimension.
GridFamily parse_family(const std::string& text);

// bound caps every grid parameter.
Report cmd_inequality_grid(const std::vector<GridFamily>& families, int bound, bool instances, const RunConfig& cfg);
// Concrete projections with known image/kernel profile, as variety specs.
std::vector<std::string> projection_instances(GridFamily family);

euler::SymbolSystem parse_system(const std::string& text);
Report cmd_symbol_check(const std::string& system, const RunConfig& cfg);
Report cmd_symbol_embed(const std::string& system, const std::string& point, const RunConfig& cfg);
// rho_x homomorphism and translation, d rho_x = (k+1) Gamma on V_k, d rho_y lowering.
Report cmd_symbol_rho(const std::string& system, std::size_t points, const RunConfig& cfg);
// lambda image against the prolongation of the VMRT; injectivity.
Report cmd_symbol_lambda(const std::string& system, const RunConfig& cfg);
// [d rho_x(e_i), d rho_y(e_j)] over all basis pairs.
Report cmd_symbol_bracket(const std::string& system, const RunConfig& cfg);
Report cmd_symbol_base_locus(const std::string& system, std::size_t samples, const RunConfig& cfg);
Report cmd_symbol_pair(const std::string& system, const RunConfig& cfg);

}  // namespace tube::app
