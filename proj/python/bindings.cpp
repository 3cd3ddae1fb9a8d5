// Python surface for the main operations.  Exact values cross the boundary as
// strings ("p/q" for rationals, decimal for big integers) so nothing rounds.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <tuple>

#include "avgamma/errors.hpp"
#include "avgamma/gamma.hpp"
#include "avgamma/groups.hpp"
#include "avgamma/lie.hpp"
#include "avgamma/symplectic.hpp"

namespace py = pybind11;
using namespace avgamma;

namespace {

AlbertType type_from(const std::string& name) {
  if (name == "I") return AlbertType::I;
  if (name == "II") return AlbertType::II;
  throw py::value_error("albert type must be \"I\" or \"II\"");
}

LieFamily family_from(const std::string& name) {
  if (name == "sl") return LieFamily::sl;
  if (name == "sp") return LieFamily::sp;
  if (name == "so") return LieFamily::so;
  throw py::value_error("lie family must be \"sl\", \"sp\", or \"so\"");
}

using FactorTuple = std::tuple<std::string, long long, long long, long long>;

VarietyData data_from(const std::vector<FactorTuple>& factors) {
  std::vector<IsotypicFactor> out;
  for (const auto& [type, e, h, mult] : factors)
    out.emplace_back(type_from(type), e, h, mult);
  return VarietyData(std::move(out));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact torsion-growth exponents and finite symplectic groups";

  py::register_exception<Error>(m, "AvgammaError", PyExc_ValueError);

  m.def(
      "gamma_simple",
      [](const std::string& type, long long e, long long h) {
        return rat_str(gamma_simple(type_from(type), e, h));
      },
      py::arg("type"), py::arg("e"), py::arg("h"),
      "Optimal exponent of a single factor, as a reduced \"p/q\" string.");

  m.def(
      "gamma_product",
      [](const std::vector<FactorTuple>& factors) {
        GammaReport report = gamma_product(data_from(factors));
        py::dict out;
        out["gamma"] = rat_str(report.gamma);
        out["achieving_subset"] = report.achieving_subset;
        out["mt_dimension"] = report.mt_dim;
        py::list table;
        for (const auto& [subset, value] : report.table)
          table.append(py::make_tuple(subset, rat_str(value)));
        out["table"] = table;
        return out;
      },
      py::arg("factors"),
      "Exponent of a product; factors are (type, e, h, multiplicity) tuples.");

  m.def(
      "mt_dimension",
      [](const std::vector<FactorTuple>& factors, const std::vector<int>& subset) {
        return mt_dimension(data_from(factors), subset);
      },
      py::arg("factors"), py::arg("subset"));

  m.def(
      "masser_bound",
      [](const std::vector<FactorTuple>& factors) {
        return masser_bound(data_from(factors)).str();
      },
      py::arg("factors"));

  m.def(
      "psi_bruteforce",
      [](const std::vector<FactorTuple>& factors,
         const std::vector<std::vector<PlacePair>>& profile) {
        auto [value, argmax] = psi_bruteforce(data_from(factors), SplittingProfile{profile});
        return py::make_tuple(rat_str(value), argmax.rs);
      },
      py::arg("factors"), py::arg("profile"),
      "(max value, argmax (r, s) table); profile lists (e, f) pairs per factor.");

  m.def("sigma_contains", &sigma_contains, py::arg("g"));
  m.def("sigma_members", &sigma_members, py::arg("max"));

  m.def(
      "mt_hypothesis_check",
      [](const FactorTuple& factor, bool has_toric_place) {
        const auto& [type, e, h, mult] = factor;
        return mt_hypothesis_check(IsotypicFactor(type_from(type), e, h, mult),
                                   has_toric_place);
      },
      py::arg("factor"), py::arg("has_toric_place") = false);

  m.def(
      "sp_order", [](int g, long long q) { return sp_order(g, q).str(); }, py::arg("g"),
      py::arg("q"));
  m.def(
      "sl_order", [](int rank, long long q) { return sl_order(rank, q).str(); },
      py::arg("m"), py::arg("q"));

  m.def(
      "prs_codim", [](int r, int s, int g) { return prs_codim(PrsSpec(r, s, g)); },
      py::arg("r"), py::arg("s"), py::arg("g"));

  m.def(
      "congruence_index",
      [](int g, long long ell, const std::vector<std::tuple<int, int, int>>& constraints) {
        std::vector<ChainConstraint> steps;
        int deepest = 1;
        for (const auto& [r, s, level] : constraints) {
          steps.push_back({PrsSpec(r, s, g), level});
          deepest = std::max(deepest, level);
        }
        CongruenceChain chain(GroupSpec(GroupFamily::Sp, g, Ring::zmod(ell, deepest)),
                              std::move(steps));
        IndexResult res = congruence_index(chain);
        return py::make_tuple(res.index.str(), res.predicted_exponent);
      },
      py::arg("g"), py::arg("ell"), py::arg("constraints"),
      "(index, predicted exponent) of a congruence-chain stabilizer; "
      "constraints are (r, s, level) triples.");

  m.def(
      "cn_span_dimension",
      [](const std::string& family, int rank, long long ell) {
        return cn_span_dimension(LieAlgebraSpec(family_from(family), rank, ell));
      },
      py::arg("family"), py::arg("m"), py::arg("ell"));

  m.def(
      "subgroup_invariants",
      [](int h, long long ell, int n, const std::vector<Vec>& generators) {
        SymplecticSpace S(h, Ring::zmod(ell, n));
        TorsionSubgroup H(S, generators);
        return py::make_tuple(m1_invariant(H), m_invariant(H));
      },
      py::arg("h"), py::arg("ell"), py::arg("n"), py::arg("generators"),
      "(m1, m) isotropy invariants of the subgroup the given vectors generate.");

  m.attr("__version__") = "1.0.0";
}
