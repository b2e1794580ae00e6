#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltaring/dsl.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/finite_ring.hpp"
#include "deltaring/harness.hpp"
#include "deltaring/profile.hpp"
#include "deltaring/report_json.hpp"
#include "deltaring/structure.hpp"

namespace py = pybind11;
namespace dr = deltaring;

namespace {

// Python ints are arbitrary precision; anything negative or huge is an
// index error, same as an out-of-range element.
std::uint64_t as_index(const py::int_& v) {
  if (v < py::int_(0)) throw dr::IndexOutOfRange("negative element index");
  return v.cast<std::uint64_t>();
}

dr::Element arith(const dr::FiniteRing& r, dr::ArithOp op, std::initializer_list<py::int_> args) {
  std::vector<std::uint64_t> raw;
  for (const auto& a : args) raw.push_back(as_index(a));
  return dr::element_arith(r, op, raw);
}

std::vector<std::vector<dr::Element>> square(const std::vector<dr::Element>& flat, std::size_t n) {
  std::vector<std::vector<dr::Element>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
  return rows;
}

// pybind11 holders cannot be shared_ptr<const T>; rings are immutable anyway.
using Handle = std::shared_ptr<dr::FiniteRing>;

Handle handle(dr::RingPtr r) { return std::const_pointer_cast<dr::FiniteRing>(std::move(r)); }

dr::RingPtr resolve(const py::object& ring) {
  if (py::isinstance<py::str>(ring)) return dr::build_ring(ring.cast<std::string>());
  return ring.cast<Handle>();
}

std::string dumps(const dr::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_deltaring, m) {
  m.doc() = "Finite rings by Cayley tables: unit classes, radicals and theorem checks";

  auto ring_error = py::register_exception<dr::RingError>(m, "RingError", PyExc_ValueError);
#define DR_EXC(name) py::register_exception<dr::name>(m, #name, ring_error.ptr())
  DR_EXC(InvalidTables);
  DR_EXC(AxiomViolation);
  DR_EXC(HomViolation);
  DR_EXC(IndexOutOfRange);
  DR_EXC(NotAnIdeal);
  DR_EXC(NotIdempotent);
  DR_EXC(NotCentral);
  DR_EXC(OrderGuardExceeded);
  DR_EXC(InvalidBimodule);
  DR_EXC(InvalidEndomorphism);
  DR_EXC(InvalidGroup);
  DR_EXC(InternalInconsistency);
  DR_EXC(SyntaxError);
  DR_EXC(UnknownName);
  DR_EXC(BadArity);
  DR_EXC(UnsupportedField);
  DR_EXC(BindingError);
  DR_EXC(UnknownCheckId);
  DR_EXC(UnknownClass);
#undef DR_EXC

  py::class_<dr::FiniteRing, Handle>(m, "Ring")
      .def_property_readonly("label", &dr::FiniteRing::label)
      .def_property_readonly("order", &dr::FiniteRing::order)
      .def_property_readonly("zero", &dr::FiniteRing::zero)
      .def_property_readonly("one", &dr::FiniteRing::one)
      .def_property_readonly("commutative", &dr::FiniteRing::is_commutative)
      .def("add", [](const dr::FiniteRing& r, py::int_ a, py::int_ b) { return arith(r, dr::ArithOp::add, {a, b}); })
      .def("sub", [](const dr::FiniteRing& r, py::int_ a, py::int_ b) { return arith(r, dr::ArithOp::sub, {a, b}); })
      .def("mul", [](const dr::FiniteRing& r, py::int_ a, py::int_ b) { return arith(r, dr::ArithOp::mul, {a, b}); })
      .def("neg", [](const dr::FiniteRing& r, py::int_ a) { return arith(r, dr::ArithOp::neg, {a}); })
      .def("pow", [](const dr::FiniteRing& r, py::int_ a, py::int_ k) { return arith(r, dr::ArithOp::pow, {a, k}); })
      .def("inverse",
           [](const dr::FiniteRing& r, py::int_ a) {
             const auto x = as_index(a);
             if (x >= r.order()) throw dr::IndexOutOfRange("element " + std::to_string(x) + " out of range");
             return dr::inverse(r, static_cast<dr::Element>(x));
           })
      .def("name",
           [](const dr::FiniteRing& r, py::int_ a) {
             const auto x = as_index(a);
             if (x >= r.order()) throw dr::IndexOutOfRange("element " + std::to_string(x) + " out of range");
             return r.element_name(static_cast<dr::Element>(x));
           })
      .def("find", &dr::FiniteRing::find_element, py::arg("display"))
      .def_property_readonly("names", &dr::FiniteRing::element_names)
      .def_property_readonly("add_table", [](const dr::FiniteRing& r) { return square(r.add_table(), r.order()); })
      .def_property_readonly("mul_table", [](const dr::FiniteRing& r) { return square(r.mul_table(), r.order()); })
      .def("center", [](const dr::FiniteRing& r) { return dr::center(r).members(); })
      .def("dump", [](const dr::FiniteRing& r) { return dr::dump_ring(r); })
      .def("__len__", &dr::FiniteRing::order)
      .def("__repr__", [](const dr::FiniteRing& r) { return "<Ring " + r.label() + " order " + std::to_string(r.order()) + ">"; });

  m.def("build", [](std::string_view text) { return handle(dr::build_ring(text)); }, py::arg("expr"),
        "Build (memoized) the ring named by a DSL expression.");
  m.def("canonical", [](std::string_view text) { return dr::print_ring_expr(dr::parse_ring_expr(text)); },
        py::arg("expr"));
  m.def("load", [](const std::string& text) { return handle(dr::load_ring(text)); }, py::arg("dump"), "Rebuild a ring from its JSON dump; all axioms are re-validated.");
  m.def(
      "from_tables",
      [](const std::vector<std::vector<dr::Element>>& add, const std::vector<std::vector<dr::Element>>& mul,
         dr::Element zero, dr::Element one, std::string label) {
        dr::RingTables t;
        t.order = add.size();
        for (const auto& row : add) t.add.insert(t.add.end(), row.begin(), row.end());
        for (const auto& row : mul) t.mul.insert(t.mul.end(), row.begin(), row.end());
        if (mul.size() != t.order) throw dr::InvalidTables("add and mul tables differ in size");
        t.zero = zero;
        t.one = one;
        return handle(dr::validate_ring(std::move(t), std::move(label)));
      },
      py::arg("add"), py::arg("mul"), py::arg("zero") = 0, py::arg("one") = 1, py::arg("label") = "R");

  m.def("order_guard", &dr::order_guard);
  m.def("set_order_guard", [](std::size_t limit) {
    dr::set_order_guard(limit);
    dr::clear_build_cache();
  });

  m.def("catalog", [] {
    std::vector<std::string> labels;
    for (const auto& e : dr::catalog()) labels.push_back(e.label);
    return labels;
  });
  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : dr::theorem_checks()) ids.push_back(c.id);
    return ids;
  });

  // Reports cross the boundary as JSON text; the Python side decodes them so
  // the dicts match the CLI's --json output exactly.
  m.def("_info", [](const py::object& ring) {
    const dr::RingPtr r = resolve(ring);
    py::gil_scoped_release release;
    return dumps(dr::info_json(dr::RingProfile(r)));
  });
  m.def("_check", [](const std::string& cls, const py::object& ring) {
    const dr::RingPtr r = resolve(ring);
    py::gil_scoped_release release;
    return dumps(dr::check_json(dr::check_class(dr::RingProfile(r), cls)));
  });
  m.def(
      "_verify",
      [](const std::vector<std::string>& ids, std::size_t max_order, unsigned threads) {
        for (const auto& id : ids) dr::find_check(id);
        py::gil_scoped_release release;
        dr::HarnessConfig config;
        config.max_order = max_order;
        config.threads = threads;
        std::vector<dr::CheckOutcome> outcomes;
        if (ids.empty()) {
          outcomes = dr::run_all(config).outcomes;
        } else {
          for (const auto& id : ids) outcomes.push_back(dr::run_check_on_catalog(id, config));
        }
        return dumps(dr::verify_json(outcomes));
      },
      py::arg("ids"), py::arg("max_order"), py::arg("threads"));
  m.def(
      "_search",
      [](const std::vector<std::string>& include, const std::vector<std::string>& exclude, std::size_t max_order,
         bool extended) {
        py::gil_scoped_release release;
        const auto rings = dr::search_classes(include, exclude, max_order, extended);
        return dumps(dr::search_json(include, exclude, max_order, rings));
      },
      py::arg("include"), py::arg("exclude"), py::arg("max_order"), py::arg("extended"));
  m.def("_classes", [] { return dumps(dr::classes_json()); });
}
