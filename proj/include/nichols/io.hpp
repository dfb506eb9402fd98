#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nichols/braided.hpp"
#include "nichols/classify.hpp"
#include "nichols/groupoid.hpp"
#include "nichols/nichols.hpp"
#include "nichols/racks.hpp"
#include "nichols/superreflect.hpp"

namespace nichols {

using Json = nlohmann::json;

/// Throws InputError "<source>:<line>:<column>: ..." on a syntax error.
Json parse_json_text(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);

/// Semantic errors name the offending field, e.g. "field q_exponents[1][0]: ...".
CycloNumber parse_scalar(const Json& j, const std::string& path = "");
/// {"conductor": N, "coeffs": [...]} of the normalized value.
Json scalar_to_json(const CycloNumber& x);

/// Rack objects, or a string naming a rack file relative to base_dir.
Rack parse_rack(const Json& j, const std::filesystem::path& base_dir = {}, const std::string& path = "");
BraidedVectorSpace parse_braiding(const Json& j, const std::filesystem::path& base_dir = {});
/// Canonical form of a braiding: dimension and every nonzero c(e_a (x) e_b) term.
Json canonical_braiding(const BraidedVectorSpace& v);

/// "roots" lists full root sets, "positive_roots" positive parts completed by negation.
struct GRSInput {
  BasicDatum basic;
  std::vector<IntMatrix> cartan;
  std::optional<std::vector<std::vector<IntVector>>> roots;
};
GRSInput parse_grs(const Json& j);
bool is_grs_file(const Json& j);

SuperDatum parse_super(const Json& j);
FiniteAbelianGroup parse_group(const Json& j, const std::string& path);

struct CartanDatumInput {
  YDDatumDiagonal datum;
  IntMatrix a;
  std::optional<CartanLiftingParams> lifting;
};
CartanDatumInput parse_cartan_datum(const Json& j);

struct RackLiftingInput {
  LiftingKind kind = LiftingKind::O3_2;
  YDDatumRack datum;
  std::vector<CycloNumber> lambda;
};
RackLiftingInput parse_rack_lifting(const Json& j);

/// Machine-readable output of the hilbert command.
struct HilbertReport {
  std::size_t theta = 0;
  std::vector<std::size_t> dims;
  bool completed = false;
  bool incomplete = false;
  std::string reason;
  std::vector<std::string> warnings;
  mpz_class total;
  std::optional<std::size_t> max_degree;
  bool relations = false;
  std::vector<std::size_t> relation_degrees;
  std::vector<std::size_t> new_relations;
  std::vector<mpz_class> ideal_dims;

  static HilbertReport from(const NicholsTruncation& t, std::optional<std::size_t> max_degree, bool relations);
  /// "1, 3, 4, 3, 1 | total 12 | complete", or "undecided within budget" when the budget ran out.
  std::string headline() const;
  bool operator==(const HilbertReport&) const = default;
};

void to_json(Json& j, const CycloNumber& x);
void from_json(const Json& j, CycloNumber& x);
void to_json(Json& j, const HilbertReport& r);
void from_json(const Json& j, HilbertReport& r);
void to_json(Json& j, const CheckItem& r);
void from_json(const Json& j, CheckItem& r);
void to_json(Json& j, const Report& r);
void from_json(const Json& j, Report& r);
void to_json(Json& j, const TypeDResult& r);
void from_json(const Json& j, TypeDResult& r);
void to_json(Json& j, const TypeFResult& r);
void from_json(const Json& j, TypeFResult& r);
void to_json(Json& j, const BasicDatum& b);
void from_json(const Json& j, BasicDatum& b);
void to_json(Json& j, const DiagonalWeylResult& r);
void from_json(const Json& j, DiagonalWeylResult& r);
void to_json(Json& j, const SuperDatum& d);
void from_json(const Json& j, SuperDatum& d);
void to_json(Json& j, const SuperOrbit& o);
void from_json(const Json& j, SuperOrbit& o);
void to_json(Json& j, const MultiplierCheck& m);
void from_json(const Json& j, MultiplierCheck& m);
void to_json(Json& j, const CartanDatumCheck& c);
void from_json(const Json& j, CartanDatumCheck& c);
void to_json(Json& j, const YDDatumDiagonal& d);
void from_json(const Json& j, YDDatumDiagonal& d);

}  // namespace nichols
