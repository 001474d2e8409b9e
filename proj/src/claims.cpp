#include "covbound/claims.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "covbound/bounds.hpp"
#include "covbound/covering.hpp"
#include "covbound/errors.hpp"
#include "covbound/families.hpp"
#include "covbound/insdel.hpp"
#include "covbound/lrc.hpp"
#include "covbound/tables.hpp"

namespace covbound {

namespace {

struct Claim {
  const char* id;
  const char* citation;
  const char* expected;
  std::function<std::string()> compute;
};

std::string params_of(const LinearCode& c) {
  return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," +
         std::to_string(min_distance(c)) + "]_" + std::to_string(c.q());
}

std::string weight_set(const LinearCode& c) {
  std::set<int> ws;
  auto hist = weight_distribution(c);
  for (std::size_t w = 1; w < hist.size(); ++w)
    if (hist[w] > 0) ws.insert(static_cast<int>(w));
  std::string out = "{";
  for (int w : ws) out += std::to_string(w) + ",";
  if (out.back() == ',') out.pop_back();
  return out + "}";
}

std::string radius_of(const LinearCode& c) {
  return std::to_string(covering_radius(c).radius);
}

std::string table_entry_str(const std::optional<tables::TableEntry>& e) {
  if (!e) return "no entry";
  if (e->value) return e->value->get_str() + (e->exact ? " exact" : " upper");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", e->value_real.value_or(0.0));
  return std::string(buf) + " upper";
}

std::string row_value(const std::vector<BoundResult>& rows,
                      const std::string& name) {
  for (const BoundResult& r : rows)
    if (r.name == name) {
      if (!r.applicable) return "inapplicable: " + r.reason;
      if (r.value) return r.value->get_str();
      if (r.value_real) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", *r.value_real);
        return buf;
      }
      return "no value";
    }
  return "row missing";
}

mpz_class cdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = {
      {"hamming-7-4-params", "Cor 2.2", "[7,4,3]_2",
       [] { return params_of(make_hamming(2, 3).code); }},
      {"hamming-7-4-radius", "Cor 2.2", "1",
       [] { return radius_of(make_hamming(2, 3).code); }},
      {"hamming-15-11-radius", "Cor 2.2", "1",
       [] { return radius_of(make_hamming(2, 4).code); }},
      {"golay-23-12-params", "Cor 2.2", "[23,12,7]_2",
       [] { return params_of(make_golay_binary().code); }},
      {"golay-23-12-radius", "Cor 2.2", "3",
       [] { return radius_of(make_golay_binary().code); }},
      {"golay-11-6-params", "Cor 2.2", "[11,6,5]_3",
       [] { return params_of(make_golay_ternary().code); }},
      {"golay-11-6-radius", "Cor 2.2", "2",
       [] { return radius_of(make_golay_ternary().code); }},
      {"hamming-7-4-delsarte", "Cor 2.2", "bound 1, radius 1",
       [] {
         const LinearCode c = make_hamming(2, 3).code;
         return "bound " + std::to_string(external_distance(c)) + ", radius " +
                std::to_string(covering_radius(c).radius);
       }},
      {"golay-23-list-lower-k14", "Cor 2.2", "4",
       [] {
         return list_size_lower_bound(2, 14, 23, mpz_class(1) << 12).get_str();
       }},
      {"golay-11-list-lower-k8", "Cor 2.2", "9",
       [] {
         mpz_class cover;
         mpz_ui_pow_ui(cover.get_mpz_t(), 3, 6);
         return list_size_lower_bound(3, 8, 11, cover).get_str();
       }},
      {"rm1-4-params", "Cor 2.3", "[16,5,8]_2",
       [] { return params_of(make_reed_muller1(4).code); }},
      {"rm1-4-radius", "Cor 2.3", "6",
       [] { return radius_of(make_reed_muller1(4).code); }},
      {"rm1-4-cover-size-form", "Cor 2.3", "32",
       [] { return first_order_rm_size_bound(4, 1).value->get_str(); }},
      {"rs-7-3-params", "Sec. 1", "[7,3,5]_7",
       [] { return params_of(make_reed_solomon(7, 7, 3).code); }},
      {"rs-7-3-defect", "Sec. 1", "0",
       [] {
         auto sd = singleton_defect(make_reed_solomon(7, 7, 3).code);
         return std::to_string(sd.value) + (sd.rounded ? " rounded" : "");
       }},
      {"rs-7-3-radius", "Sec. 1", "4",
       [] { return radius_of(make_reed_solomon(7, 7, 3).code); }},
      {"kasami-2-params", "Ex 3.1", "[15,6]_2",
       [] {
         const LinearCode c = make_kasami(2).code;
         return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) +
                "]_" + std::to_string(c.q());
       }},
      {"kasami-2-weights", "Ex 3.1", "{6,8,10}",
       [] { return weight_set(make_kasami(2).code); }},
      {"kasami-2-dual-delsarte", "Ex 3.1", "3",
       [] {
         return std::to_string(external_distance(dual(make_kasami(2).code)));
       }},
      {"table-K-2-15-3", "Sec. 4", "112 exact",
       [] { return table_entry_str(tables::lookup_K(2, 15, 3)); }},
      {"table-K-2-16-3", "Sec. 2", "192 upper",
       [] { return table_entry_str(tables::lookup_K(2, 16, 3)); }},
      {"table-K-2-33-5", "Sec. 4", "90112 upper",
       [] { return table_entry_str(tables::lookup_K(2, 33, 5)); }},
      {"table-l-5-3-closed-form", "Sec. 2", "74.21 upper",
       [] { return table_entry_str(tables::lookup_length(64, 5, 3)); }},
      {"st-classical-L1", "Sec. 1", "16",
       [] {
         CodeParams p;
         p.q = 2;
         p.n = 10;
         p.d_list = 3;
         p.L = 1;
         return generalized_singleton_ST(p).value->get_str();
       }},
      {"st-equals-redundancy-L4", "Cor 2.1", "512 = 512",
       [] {
         CodeParams p;
         p.q = 2;
         p.n = 10;
         p.d_list = 3;
         p.L = 4;
         return generalized_singleton_ST(p).value->get_str() + " = " +
                redundancy_list_bound(p).value->get_str();
       }},
      {"thm-2-1-golay-cover-L2", "Thm 2.1", "8192",
       [] {
         const LinearCode g = make_golay_binary().code;
         RadiusResult rr = covering_radius(g);
         return covering_code_bound(as_code(g), rr, 23, 3, 2).value->get_str();
       }},
      {"thm-2-1-table-cover", "Sec. 2", "192",
       [] {
         auto e = tables::lookup_K(2, 16, 3);
         if (!e) return std::string("no entry");
         return covering_code_bound(*e, 16, 3, 1).value->get_str();
       }},
      {"thm-2-1-implied-list-size", "Sec. 2", "3",
       [] { return cdiv(mpz_class(1) << 9, mpz_class(192)).get_str(); }},
      {"bush-q3", "Sec. 1", "25",
       [] { return bush_bound(3).value->get_str(); }},
      {"bound-V-2-3-2", "Bound V", "256",
       [] {
         CodeParams p;
         p.q = 2;
         p.n = 14;
         p.d = 5;
         return row_value(family_construction_bounds(p), "hamming_sum_family");
       }},
      {"cor-4-1-R3-m2", "Cor 4.1", "512",
       [] {
         CodeParams p;
         p.q = 2;
         p.n = 15;
         p.d_list = 3;
         return row_value(family_construction_bounds(p),
                          "odd_radius_binary_family");
       }},
      {"bound-III-p3-R2", "Bound III", "729",
       [] {
         CodeParams p;
         p.q = 3;
         p.n = 8;
         p.d = 5;
         return row_value(family_construction_bounds(p),
                          "even_radius_prime_family");
       }},
      {"cor-2-4-desk-scale", "Cor 2.4", "inapplicable",
       [] {
         BoundResult r = asymptotic_list_size_bound(8, 4, 14, 1000000, 1);
         return r.applicable ? r.value->get_str() : "inapplicable";
       }},
      {"cor-5-1-q11-e5", "Cor 5.1", "1329",
       [] {
         LengthQuery qy;
         qy.q = 11;
         qy.d = 11;
         qy.defect = 1;
         return row_value(length_bounds(qy), "odd_divisor_exclusion");
       }},
      {"thm-5-1-blockdiag-2-3-2", "Thm 5.1", "13",
       [] {
         const LinearCode bd = make_block_diagonal(2, 3, 2).code;
         RadiusResult rr = covering_radius(bd);
         if (rr.radius != 2 || !rr.exact) return std::string("bad cover radius");
         VerifiedCover cover;
         cover.size = mpz_class(1) << bd.k();
         cover.n = bd.n();
         cover.radius = rr.radius;
         cover.provenance = "two-block projective parity construction";
         LengthQuery qy;
         qy.q = 2;
         qy.d = 5;
         qy.defect = 0;
         qy.linear = true;
         return row_value(length_bounds(qy, {}, {cover}),
                          "defect_exclusion_via_cover");
       }},
      {"insdel-repetition-3-3", "Sec. 6", "6 <= 6",
       [] {
         Code c = as_code(make_repetition(3, 3).code);
         int di = code_insdel_distance(c);
         return std::to_string(di) + " <= " +
                std::to_string(2 * min_distance(c));
       }},
      {"insdel-half-singleton-rep-4-1", "Sec. 6", "8 <= 8 holds",
       [] {
         InsdelReport rep = insdel_report(as_code(make_repetition(2, 4).code));
         for (const InsdelCheck& chk : rep.checks)
           if (chk.name == "half_singleton")
             return std::to_string(rep.insdel_dist) + " <= " +
                    std::to_string(chk.limit) +
                    (chk.holds ? " holds" : " violated");
         return std::string("check missing");
       }},
      {"insdel-all-ones-skip", "Sec. 6",
       "skipped: code contains the all-ones word",
       [] {
         InsdelReport rep = insdel_report(as_code(make_repetition(2, 4).code));
         for (const InsdelCheck& chk : rep.checks)
           if (chk.name == "improved_half_singleton")
             return chk.applicable ? std::string("not skipped")
                                   : "skipped: " + chk.reason;
         return std::string("check missing");
       }},
      {"cor-6-1-bound-V-form", "Cor 6.1", "256",
       [] {
         Code c;
         c.f = field_make(2);
         c.n = 14;
         Word zero(14, 0), five(14, 0);
         for (int i = 0; i < 5; ++i) five[i] = 1;
         c.words = {zero, five};  // insdel distance 28 - 2*9 = 10
         InsdelReport rep = insdel_report(c);
         if (rep.insdel_dist != 10) return std::string("bad insdel distance");
         return row_value(rep.size_bounds, "hamming_sum_family");
       }},
      {"lrc-singleton-4-2-1", "Sec. 7", "2",
       [] {
         LrcQuery qy;
         qy.n = 4;
         qy.k = 2;
         qy.r = 1;
         qy.q = 2;
         return row_value(lrc_bounds(qy), "lrc_singleton_distance");
       }},
      {"lrc-r-ge-k-singleton", "Sec. 7", "5",
       [] {
         LrcQuery qy;
         qy.n = 6;
         qy.k = 2;
         qy.r = 3;
         qy.q = 2;
         return row_value(lrc_bounds(qy), "lrc_singleton_distance");
       }},
      {"cor-7-2-R2-q3", "Cor 7.2", "80",
       [] {
         LrcQuery qy;
         qy.n = 10;
         qy.k = 2;
         qy.r = 1;
         qy.q = 3;
         qy.R = 2;
         return row_value(lrc_bounds(qy), "optimal_lrc_length_hamming_sum");
       }},
  };
  return claims;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const Claim& c : registry()) ids.push_back(c.id);
  return ids;
}

std::vector<ClaimResult> run_claims(const std::string& only_id) {
  const std::vector<Claim>& claims = registry();
  if (!only_id.empty()) {
    bool known = false;
    for (const Claim& c : claims) known = known || only_id == c.id;
    if (!known) fail(Errc::bad_params, "unknown claim id: " + only_id);
  }
  std::vector<ClaimResult> out;
  for (const Claim& c : claims) {
    if (!only_id.empty() && only_id != c.id) continue;
    ClaimResult r;
    r.id = c.id;
    r.citation = c.citation;
    r.expected = c.expected;
    auto start = std::chrono::steady_clock::now();
    try {
      r.computed = c.compute();
    } catch (const ToolError& e) {
      r.computed = std::string("error: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
    r.pass = (r.computed == r.expected);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace covbound
