#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beztate/cli.hpp"
#include "beztate/json_io.hpp"
#include "beztate/selftest.hpp"

namespace py = pybind11;
using namespace beztate;

namespace {

// Everything crosses the boundary as JSON text in the CLI schemas; the
// Python package turns it into dicts.

std::vector<Polynomial> parse_forms(const std::string& text, const Field& field) {
  return forms_from_json(Json::parse(text), field);
}

std::string bezoutian_json(const std::string& forms, const std::string& field) {
  const Field k = Field::parse(field);
  return bezout_data_to_json(bezoutian(parse_forms(forms, k))).dump();
}

std::string bezout_slice_json(const std::string& forms, int a, const std::string& field) {
  const Field k = Field::parse(field);
  return matrix_to_json(bezout_slice(bezoutian(parse_forms(forms, k)), a)).dump();
}

std::string window_json(int n, int d, int ell, int p_min, int p_max, int t_min, int t_max, const std::string& field,
                        const std::optional<std::string>& subspace) {
  TateConfig cfg;
  cfg.field = Field::parse(field);
  cfg.n = n;
  cfg.d = d;
  cfg.ell = ell;
  cfg.p_min = p_min;
  cfg.p_max = p_max;
  if (subspace) cfg.subspace = parse_forms(*subspace, cfg.field);
  return window_to_json(build_window(cfg, t_min, t_max)).dump();
}

std::string verify_json(const std::string& window, const std::string& check) {
  return report_to_json(cli::verify_window(window_from_json(Json::parse(window)), check)).dump();
}

std::string syzygy_space_json(const std::string& forms, int b, const std::string& field) {
  const Field k = Field::parse(field);
  return syzygy_space_to_json(syzygy_space(make_koszul_setup(parse_forms(forms, k)), b)).dump();
}

std::string bezout_syzygies_json(const std::string& forms, int b, const std::string& field) {
  const Field k = Field::parse(field);
  Json out = Json::array();
  for (const auto& t : bezout_syzygies(make_koszul_setup(parse_forms(forms, k)), b)) out.push_back(forms_to_json(t));
  return out.dump();
}

std::string apolarity_matrix_json(const std::string& forms, int a, const std::string& field) {
  const Field k = Field::parse(field);
  return matrix_to_json(apolarity_matrix(make_koszul_setup(parse_forms(forms, k)), a)).dump();
}

std::string apolarity_check_json(const std::string& forms, std::optional<int> a, const std::string& field) {
  const Field k = Field::parse(field);
  const KoszulSetup s = make_koszul_setup(parse_forms(forms, k));
  return report_to_json(a ? apolarity_check(s, *a) : apolarity_check(s)).dump();
}

std::size_t homology(const std::string& forms, int i, int b, const std::string& field) {
  const Field k = Field::parse(field);
  return homology_dim(make_koszul_setup(parse_forms(forms, k)), i, b);
}

std::size_t matrix_rank(const std::string& matrix, const std::string& field) {
  return rank(matrix_from_json(Json::parse(matrix), Field::parse(field)));
}

std::vector<std::vector<std::string>> kernel(const std::string& matrix, const std::string& field) {
  const Field k = Field::parse(field);
  std::vector<std::vector<std::string>> out;
  for (const auto& v : kernel_basis(matrix_from_json(Json::parse(matrix), k))) {
    auto& row = out.emplace_back();
    for (const auto& x : v) row.push_back(k.format(x));
  }
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Bezoutians, Tate resolution windows and Koszul dualities";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("bezoutian", &bezoutian_json, py::arg("forms"), py::arg("field") = "p:32003");
  m.def("bezout_slice", &bezout_slice_json, py::arg("forms"), py::arg("a"), py::arg("field") = "p:32003");
  m.def("tate_window", &window_json, py::arg("n"), py::arg("d"), py::arg("ell"), py::arg("p_min"), py::arg("p_max"),
        py::arg("t_min"), py::arg("t_max"), py::arg("field") = "p:32003", py::arg("subspace") = py::none());
  m.def("verify", &verify_json, py::arg("window"), py::arg("check"));
  m.def("syzygy_space", &syzygy_space_json, py::arg("forms"), py::arg("b"), py::arg("field") = "p:32003");
  m.def("bezout_syzygies", &bezout_syzygies_json, py::arg("forms"), py::arg("b"), py::arg("field") = "p:32003");
  m.def("apolarity_matrix", &apolarity_matrix_json, py::arg("forms"), py::arg("a"), py::arg("field") = "p:32003");
  m.def("apolarity_check", &apolarity_check_json, py::arg("forms"), py::arg("a") = py::none(),
        py::arg("field") = "p:32003");
  m.def("homology_dim", &homology, py::arg("forms"), py::arg("i"), py::arg("b"), py::arg("field") = "p:32003");
  m.def("rank", &matrix_rank, py::arg("matrix"), py::arg("field") = "p:32003");
  m.def("kernel_basis", &kernel, py::arg("matrix"), py::arg("field") = "p:32003");
  m.def("selftest", [] { return report_to_json(run_selftest()).dump(); });
  m.def("run_cli", &run_cli, py::arg("args"));
}
