#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cyclomul/complexity.hpp"
#include "cyclomul/cyclo.hpp"
#include "cyclomul/errors.hpp"
#include "cyclomul/oracle.hpp"
#include "cyclomul/text_format.hpp"
#include "cyclomul/verify.hpp"

namespace py = pybind11;
using namespace cyclomul;

namespace {

Multiplier algo(const std::string& id) {
  if (auto m = parse_multiplier(id)) return *m;
  throw UnsupportedCombination("unknown multiplier '" + id + "'");
}

CountTable table_id(const std::string& which) {
  if (which == "table1") return CountTable::Table1;
  if (which == "table6") return CountTable::Table6;
  throw UnsupportedCombination("unknown table '" + which + "'");
}

py::dict counts_dict(const OpCount& c) {
  py::dict d;
  d["mult"] = c.mult;
  d["doub"] = c.doub;
  d["add"] = c.add;
  d["total"] = c.total();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cyclotomic ring, field and optimal normal basis multipliers";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NotPrime>(m, "NotPrime", base.ptr());
  py::register_exception<InvalidCoordinate>(m, "InvalidCoordinate", base.ptr());
  py::register_exception<InvalidDimension>(m, "InvalidDimension", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<OddDimensionRequired>(m, "OddDimensionRequired", base.ptr());
  py::register_exception<NoNormalBasis>(m, "NoNormalBasis", base.ptr());
  py::register_exception<NotFoldable>(m, "NotFoldable", base.ptr());
  py::register_exception<OracleUnavailable>(m, "OracleUnavailable", base.ptr());
  py::register_exception<UnsupportedCombination>(m, "UnsupportedCombination", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("algorithms", [] {
    std::vector<std::string> ids;
    for (const auto a : all_multipliers()) ids.emplace_back(multiplier_id(a));
    return ids;
  });

  m.def(
      "multiply",
      [](const std::string& id, std::uint32_t p, const std::vector<std::int64_t>& a,
         const std::vector<std::int64_t>& b) {
        OpCount count;
        const auto r = run_multiplier(algo(id), p, static_cast<std::uint32_t>(a.size()), a, b,
                                      count);
        py::dict out;
        out["product"] = r.product;
        out["sqrt"] = r.root ? py::cast(*r.root) : py::none();
        out["counts"] = counts_dict(count);
        return out;
      },
      py::arg("algo"), py::arg("p"), py::arg("a"), py::arg("b"),
      "Multiply two coordinate vectors. The size is len(a): n for ring multipliers, m for "
      "normal-basis ones. Returns product, sqrt (or None) and operation counts.");

  m.def(
      "measure",
      [](const std::string& id, std::uint32_t p, std::uint32_t size) {
        return counts_dict(measure(algo(id), p, size));
      },
      py::arg("algo"), py::arg("p"), py::arg("size"));

  m.def(
      "expected_counts",
      [](const std::string& label, std::int64_t x) {
        return counts_dict(expected_counts(find_formula(label), x));
      },
      py::arg("row"), py::arg("size"));

  m.def(
      "table_rows",
      [](const std::string& which) {
        std::vector<std::string> labels;
        for (const auto& r : count_formulas(table_id(which))) labels.push_back(r.label);
        return labels;
      },
      py::arg("which"));

  m.def(
      "render_table",
      [](const std::string& which, const std::vector<std::int64_t>& sizes) {
        py::list out;
        for (const auto& r : render_table(table_id(which), sizes)) {
          py::dict d;
          d["row_label"] = r.row_label;
          d["multiplier"] = r.multiplier.empty() ? py::none() : py::cast(r.multiplier);
          d["size"] = r.size;
          d["expected"] = counts_dict(r.expected);
          d["measured"] = r.measured ? py::object(counts_dict(*r.measured)) : py::none();
          d["match"] = r.match ? py::cast(*r.match) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("which"), py::arg("sizes"));

  m.def("normal_basis_exists", &normal_basis_exists, py::arg("m"), py::arg("k"), py::arg("q"));

  m.def(
      "sqrt_perm",
      [](std::uint32_t p, const std::vector<std::int64_t>& d) {
        return sqrt_perm(CycloElement::from_values(GroundField(p), d)).values();
      },
      py::arg("p"), py::arg("d"));

  m.def(
      "fields_equal",
      [](std::uint32_t p, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        const GroundField f(p);
        return fields_equal(CycloElement::from_values(f, a), CycloElement::from_values(f, b));
      },
      py::arg("p"), py::arg("a"), py::arg("b"));

  m.def(
      "subring_closure",
      [](std::uint32_t p, const std::vector<std::vector<std::int64_t>>& generators) {
        const GroundField f(p);
        std::vector<CycloElement> gens;
        for (const auto& g : generators) gens.push_back(CycloElement::from_values(f, g));
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& e : subring_closure(gens)) out.push_back(e.values());
        return out;
      },
      py::arg("p"), py::arg("generators"));

  m.def("parse_vector", &parse_vector, py::arg("text"), py::arg("p"), py::arg("length"));
  m.def(
      "format_vector",
      [](const std::vector<std::int64_t>& v) { return format_vector(std::span(v)); },
      py::arg("values"));

  m.def(
      "verify",
      [](std::uint32_t p, std::uint32_t max_n, bool exhaustive, std::uint32_t samples,
         std::uint64_t seed, std::uint32_t max_m) {
        VerifyOptions opt;
        opt.p = p;
        opt.max_n = max_n;
        opt.exhaustive = exhaustive;
        opt.samples = samples;
        opt.seed = seed;
        opt.max_m = max_m;
        py::list out;
        for (const auto& r : run_verify(opt)) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["checks"] = r.checks;
          d["counterexample"] = r.counterexample;
          d["skipped"] = r.skipped;
          out.append(d);
        }
        return out;
      },
      py::arg("p") = 2, py::arg("max_n") = 7, py::arg("exhaustive") = false,
      py::arg("samples") = 100, py::arg("seed") = 1, py::arg("max_m") = 6);
}
