#ifndef KDIFF_IO_HPP
#define KDIFF_IO_HPP

#include <string>

#include "json.hpp"
#include "kdiff/schemes.hpp"

namespace kdiff {

// Parses the text syntax for polynomials: variables X0..Xn (projective) or
// x1..xn (affine), ^ for powers, rational literals a/b, parentheses. `*` is
// optional after a numeric literal only; juxtaposed variables are an error.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

// Scheme file handling (JSON documents with "format": 1).
SchemeSpec parse_scheme_json(const nlohmann::json& doc);
SchemeSpec load_scheme_file(const std::string& path);
nlohmann::json scheme_to_json(const SchemeSpec& spec);

nlohmann::json hilbert_to_json(const HilbertData& h);

// Everything a command reports: one JSON body rendered either as JSON or as
// an aligned text table built from the same values.
struct ResultDocument {
    std::string command;
    nlohmann::json body;

    nlohmann::json to_json() const;
    std::string render_table() const;
};

// Entry point used by the CLI binary; returns the process exit code
// (0 success, 1 computation error, 2 usage error).
int cli_run(int argc, const char* const* argv);

}  // namespace kdiff

#endif
