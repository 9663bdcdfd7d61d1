#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfalg/field.hpp"

namespace hopf {

enum class Side { H, K };

std::string side_name(Side s);
Side parse_side(const std::string& s);

// Parameters (i, j, k, iota) of a two-dimensional simple object; for
// one-dimensional objects (i, j, k) is used with iota ignored.
struct Params {
  int i = 0, j = 0, k = 0, iota = 0;
  bool operator<(const Params& o) const;
  bool operator==(const Params& o) const = default;
  std::string to_string() const;
};

// Rank-two diagonal braiding: vertex labels and the edge label q12*q21.
struct GDD {
  Scalar q11, q22, e;
  bool operator==(const GDD& o) const = default;
};

// Least m <= 24 with (m+1)_q = 0 or q^m e = 1, q the label at `vertex` (1 or 2).
std::optional<int> cartan_entry(const GDD& d, int vertex);
// Reflection at `vertex`; throws std::domain_error if the Cartan entry is undefined.
GDD reflect(const GDD& d, int vertex);
// q_beta for beta = a*alpha1 + b*alpha2.
Scalar root_label(const GDD& d, int a, int b);

struct WeylVerdict {
  bool finite = false;
  int positive_roots = 0;
  int objects = 0;  // distinct diagrams met along the chain
  std::vector<std::pair<int, int>> roots;
  std::string reason;
};
// Walks the alternating reflection chain beta_t = s_1 s_2 ... (alpha_v) from
// alpha1; finite iff it reaches alpha2 through positive roots with defined
// Cartan entries and no root labelled 1.
WeylVerdict weyl_groupoid_finite(const GDD& d, int max_steps = 64);

// Diagram of X + X_{ijk iota} (H side) or Y + Y_{ijk iota} (K side).
GDD side_diagram(Side s, const Params& p);

bool in_parameter_set(Side s, const Params& p);
std::vector<Params> parameter_set(Side s);
std::vector<Params> one_dim_parameters();  // (i, j, k) in {0,1} x {0,1} x {0..5}

// Labels "L0*", "L0**", "L1".."L6", "L1*" (H) or "T..." (K).
std::vector<std::string> classify_param(Side s, const Params& p);
// "L0"/"T0" when the one-dimensional Nichols algebra is an exterior algebra.
std::vector<std::string> classify_one_dim(Side s, const Params& p);
bool has_label(const std::vector<std::string>& labels, const std::string& l);
// Accepts "L1", "Λ1", "T0*", "Θ0*"...
std::string normalize_label(const std::string& l);

// Dimension of the Nichols algebra predicted by the class (0 = infinite).
int expected_nichols_dim(Side s, const Params& p);
int expected_nichols_dim_one(Side s, const Params& p);
// Exponent N in the power relation of classes 5 and 6.
int class_power_exponent(Side s, const Params& p);

struct PartitionAudit {
  Side side = Side::H;
  int total = 0;
  std::map<std::string, int> counts;
  std::vector<Params> unclassified;
  std::vector<std::pair<Params, std::vector<std::string>>> overlaps;  // among finite classes
  int one_dim_exterior = 0;
  // Reflected diagrams against their closed forms (H side only).
  int reflected_vertex_mismatch = 0;
  int reflected_edge_mismatch = 0;
  int reflected_edge_sign_flipped = 0;
  std::string report() const;
};
PartitionAudit partition_audit(Side s);

}  // namespace hopf
