#pragma once

#include "flatjet/counterexample.hpp"
#include "flatjet/diff_operator.hpp"
#include "flatjet/ode1d.hpp"
#include "flatjet/recursion.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace flatjet {

using json = nlohmann::json;

// Rationals are always strings ("p" or "p/q") so no float ever enters a file.

json to_json(const Scalar &s);
Scalar scalar_from_json(const json &j, const std::string &where);

/// Inverse of to_string(const Scalar &): "a", "bi", "a+bi", "a-bi".
Scalar parse_scalar(std::string_view text);

/// [{"gamma": [...], "re": "p/q", "im": "p/q"}, ...] in graded-lex order.
json to_json(const Jet &a);
Jet jet_from_json(const json &j, std::size_t dim, unsigned trunc_degree, const std::string &where);

json to_json(const DiffOperator &op);
DiffOperator operator_from_json(const json &j);
DiffOperator parse_operator_file(const std::filesystem::path &path);

/// "fnv1a64:<16 hex digits>" of the canonical operator JSON.
std::string operator_digest(const DiffOperator &op);

json to_json(const SolveTrace &trace);

json to_json(const CounterexampleCertificate &cert);
CounterexampleCertificate certificate_from_json(const json &j);
CounterexampleCertificate parse_certificate_file(const std::filesystem::path &path);

/// Canonical text of a certificate (pretty-printed, trailing newline).
std::string serialize(const CounterexampleCertificate &cert);

/// Writes the certificate; throws InvariantViolation (without touching the
/// file) if any certificate invariant fails.
void emit_certificate(const CounterexampleCertificate &cert, const std::filesystem::path &path);

json to_json(const OdeProblem &p);
OdeProblem ode_problem_from_json(const json &j);
OdeProblem parse_ode_file(const std::filesystem::path &path);

/// Reads and parses a JSON file; parse errors carry line and column.
json read_json_file(const std::filesystem::path &path);

} // namespace flatjet
