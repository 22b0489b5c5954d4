#include "specjoin/cospectral.hpp"

#include <json.hpp>

#include "specjoin/constructions.hpp"
#include "specjoin/error.hpp"
#include "specjoin/exact.hpp"
#include "specjoin/isomorphism.hpp"

namespace specjoin {

CospectralCertificate exact_cospectral(const Graph& g, const Graph& h,
                                       bool check_isomorphism, int max_order) {
  CospectralCertificate cert;
  cert.poly_a = monic_rational_form(pencil_charpoly(g, max_order));
  cert.poly_b = monic_rational_form(pencil_charpoly(h, max_order));
  cert.equal = cert.poly_a == cert.poly_b;
  if (check_isomorphism) cert.isomorphic = is_isomorphic(g, h);
  return cert;
}

CospectralJoinPair build_cospectral_join_pair(const Graph& g1, const Graph& g2,
                                              const Graph& h1, const Graph& h2,
                                              JoinKind kind,
                                              bool check_isomorphism) {
  regular_profile(g1);
  regular_profile(g2);
  regular_profile(h1);
  regular_profile(h2);
  if (!exact_cospectral(g1, g2).equal)
    throw Error(ErrorKind::Domain,
                "g1 and g2 are not normalized-Laplacian cospectral");
  if (!exact_cospectral(h1, h2).equal)
    throw Error(ErrorKind::Domain,
                "h1 and h2 are not normalized-Laplacian cospectral");
  Graph a = (kind == JoinKind::SV ? sv_join(g1, h1) : se_join(g1, h1)).graph;
  Graph b = (kind == JoinKind::SV ? sv_join(g2, h2) : se_join(g2, h2)).graph;
  CospectralCertificate cert =
      exact_cospectral(a, b, check_isomorphism, a.vertex_count());
  return CospectralJoinPair{std::move(a), std::move(b), std::move(cert)};
}

std::string certificate_json(const CospectralCertificate& c) {
  nlohmann::ordered_json j;
  auto fractions = [](const std::vector<mpq_class>& poly) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& q : poly) arr.push_back(q.get_str());
    return arr;
  };
  j["equal"] = c.equal;
  j["polyA"] = fractions(c.poly_a);
  j["polyB"] = fractions(c.poly_b);
  if (c.isomorphic.has_value()) j["isomorphic"] = *c.isomorphic;
  return j.dump(2) + "\n";
}

}  // namespace specjoin
