#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parasoc/cake.hpp"
#include "parasoc/circuit.hpp"
#include "parasoc/election.hpp"
#include "parasoc/mab.hpp"

namespace parasoc {

// Election text format:
//
//   m n
//   [label_0 ... label_{m-1}]        optional; present iff there are n + 1 data lines
//   a_1 a_2 ... a_m                  n rows, each a permutation of 0..m-1, best first
//
// '#' starts a comment that runs to the end of the line. Tokens are separated by blanks.
Election parse_election(std::string_view text);
/// Canonical form: no comments, single spaces, '\n' after every line.
std::string write_election(const Election& e);

/// PrefLib strict-order (SOC) data, both the current '#'-header format and the legacy
/// count-prefixed format. Alternative ids are shifted from 1-based to 0-based.
Election parse_preflib_soc(std::string_view text);

/// PrefLib when the text carries PrefLib markers or a one-integer first line, native otherwise.
Election parse_election_auto(std::string_view text);

// Circuit text format, one statement per line:
//
//   <gid> INPUT                      variables, in order x_0, x_1, ...; all before other gates
//   <gid> <KIND> <gid> [<gid> ...]   KIND in NOT AND2 OR2 ANDBIG ORBIG MAJ; inputs defined above
//   OUTPUT <gid>                     exactly once, last statement
Circuit parse_circuit(std::string_view text);
std::string write_circuit(const Circuit& c);

// Density text format: each player starts with a line "player", followed by its pieces
//
//   piece <l> <r> <c0> [<c1> ... <c_beta>]
//
// with rational literals "p/q" (integers and finite decimals are accepted too).
std::vector<PiecewisePolyDensity> parse_densities(std::string_view text, int max_degree = 3);
std::string write_densities(std::span<const PiecewisePolyDensity> densities);

// MAB text format:
//
//   m n
//   agenda <id> ...                  optional
//   ballot <id> ...                  n lines (a ballot may be empty)
MabInstance parse_mab(std::string_view text);
std::string write_mab(const MabInstance& inst);

}  // namespace parasoc
