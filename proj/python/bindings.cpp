#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vsa/algebras.hpp"
#include "vsa/prolong.hpp"

namespace py = pybind11;
using namespace vsa;

namespace {

py::list dims_list(const std::map<int, Superdim>& dims) {
  py::list out;
  for (const auto& [d, s] : dims) out.append(py::make_tuple(d, s.even, s.odd));
  return out;
}

py::list py_verify(const std::string& algebra, const std::string& side) {
  auto reg = Registry::load();
  const auto& e = reg.require(algebra);
  auto r = make_realization(e);
  Evaluator ev(full_table(e, r));
  auto cartan = cartan_elements(e, *r);
  py::list out;
  for (const auto& rec : load_relations(reg, e, side == "all" ? "" : side)) {
    std::map<std::string, int> degrees;
    if (e.sides.count(rec.side)) degrees = generator_degrees(e, *r, rec.side);
    auto res = check_relation(ev, rec, {}, cartan, degrees);
    py::dict row;
    row["line"] = rec.line;
    row["side"] = rec.side;
    row["lhs"] = rec.lhs;
    row["rhs"] = rec.rhs;
    row["status"] = to_string(res.status);
    if (res.status == RelationResult::Status::Scalar) row["scalar"] = to_string(res.scalar);
    if (!res.flipped.empty()) row["flipped"] = res.flipped;
    if (!res.residual.empty()) row["residual"] = res.residual;
    if (res.degree) row["degree"] = *res.degree;
    out.append(row);
  }
  return out;
}

py::dict py_h2(const std::string& algebra, std::string side, int max_degree) {
  auto reg = Registry::load();
  const auto& e = reg.require(algebra);
  if (side.empty()) side = e.sides.count("-") ? "-" : "+";
  auto r = make_realization(e);
  auto records = load_relations(reg, e, side);
  auto h = side_homology(e, r, side, max_degree, false, &records);
  py::list degrees;
  for (const auto& d : h.degrees) {
    py::dict row;
    row["degree"] = d.degree;
    row["h1"] = d.h1;
    row["h2"] = d.h2;
    row["relation_rank"] = d.relation_rank;
    degrees.append(row);
  }
  py::dict out;
  out["algebra"] = e.id;
  out["side"] = side;
  out["window"] = py::make_tuple(h.window.lo, h.window.hi);
  out["dims"] = dims_list(h.dims);
  out["degrees"] = degrees;
  out["failing_relation_lines"] = h.failing_lines;
  return out;
}

py::dict py_prolong(const std::string& algebra, const std::string& r, int max_degree) {
  auto reg = Registry::load();
  auto res = prolong_algebra(reg.require(algebra), r, max_degree);
  py::dict out;
  out["method"] = res.method;
  out["dims"] = dims_list(res.dims);
  py::list split;
  for (const auto& p : res.splitting) split.append(py::make_tuple(p.name, p.dim.even, p.dim.odd, p.in_algebra));
  out["splitting"] = split;
  out["splitting_direct"] = res.splitting_is_direct;
  return out;
}

}  // namespace

PYBIND11_MODULE(_vsa, m) {
  m.doc() = "Relation checks, homology and prolongations of vectorial Lie superalgebras";
  py::register_exception<Error>(m, "VsaError", PyExc_ValueError);
  m.def("algebras", [] {
    auto reg = Registry::load();
    std::vector<std::string> ids;
    for (const auto& e : reg.entries()) ids.push_back(e.id);
    return ids;
  });
  m.def("data_dir", [] { return Registry::default_dir().string(); });
  m.def("verify", &py_verify, py::arg("algebra"), py::arg("side") = "all");
  m.def("h2", &py_h2, py::arg("algebra"), py::arg("side") = "", py::arg("max_degree") = 8);
  m.def("prolong", &py_prolong, py::arg("algebra"), py::arg("r") = "0", py::arg("max_degree") = 8);
  m.def("negative_dims", [](const std::string& algebra) {
    auto reg = Registry::load();
    const auto& e = reg.require(algebra);
    return dims_list(negative_dims(e, make_realization(e)));
  });
}
