#ifndef KDIFF_VERIFY_HPP
#define KDIFF_VERIFY_HPP

#include <string>
#include <vector>

#include "kdiff/schemes.hpp"

namespace kdiff {

struct CheckLine {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Built-in example schemes, also shipped as JSON under fixtures/.
const std::vector<std::pair<std::string, std::string>>& fixture_texts();
SchemeSpec fixture_spec(const std::string& name);

// The individual verification suites (one per acceptance criterion).
std::vector<CheckLine> criterion_five_point_tables();
std::vector<CheckLine> criterion_conic_with_double_point();
std::vector<CheckLine> criterion_euler_koszul_tables();
std::vector<CheckLine> criterion_general_position_regularity();
std::vector<CheckLine> criterion_small_char_divergence();
std::vector<CheckLine> criterion_non_rational_support();
std::vector<CheckLine> criterion_local_formula_grid();
std::vector<CheckLine> criterion_fatpoint_hp_sweep();
std::vector<CheckLine> criterion_property_suite();
std::vector<CheckLine> criterion_char_gates();

VerifyReport verify_paper_examples();
VerifyReport verify_fatpoint_sweep();
VerifyReport verify_char_gates();

}  // namespace kdiff

#endif
