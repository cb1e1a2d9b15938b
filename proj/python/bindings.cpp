#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "macneille/completion.hpp"
#include "macneille/errors.hpp"
#include "macneille/extensions.hpp"
#include "macneille/io.hpp"
#include "macneille/poset.hpp"
#include "macneille/verify.hpp"

namespace py = pybind11;
using namespace macneille;

namespace {

using Labels = std::vector<std::string>;

py::object to_python(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Subset subset(const FinitePoset& p, const Labels& labels) { return p.subset_of_labels(labels); }

Labels labels(const FinitePoset& p, const Subset& s) { return p.labels_of(s); }

CofinalSelector selector_from(const FinitePoset& x, const py::object& spec) {
  if (py::isinstance<py::str>(spec)) {
    const auto name = spec.cast<std::string>();
    if (name == "maximal" || name == "MaximalElements") return CofinalSelector::maximal_elements();
    if (name == "identity" || name == "Identity") return CofinalSelector::identity();
    throw ValidationError("unknown selector '" + name + "'");
  }
  std::map<Subset::Word, Subset> table;
  for (const auto& [in, out] : spec.cast<std::vector<std::pair<Labels, Labels>>>()) {
    table.emplace(x.subset_of_labels(in).bits(), x.subset_of_labels(out));
  }
  return CofinalSelector::explicit_table(std::move(table));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite posets, Dedekind-MacNeille completions and extensions of maps between posets";

  py::register_exception<Error>(m, "Error");
  py::register_exception<CycleError>(m, "CycleError", m.attr("Error"));
  py::register_exception<HypothesisError>(m, "HypothesisError", m.attr("Error"));
  py::register_exception<NotASubsetError>(m, "NotASubsetError", m.attr("Error"));
  py::register_exception<SizeCapError>(m, "SizeCapError", m.attr("Error"));
  py::register_exception<InvalidSelectorError>(m, "InvalidSelectorError", m.attr("Error"));
  py::register_exception<UnknownCheckError>(m, "UnknownCheckError", m.attr("Error"));
  py::register_exception<UnknownElementError>(m, "UnknownElementError", m.attr("Error"));
  py::register_exception<ParseError>(m, "ParseError", m.attr("Error"));
  py::register_exception<ValidationError>(m, "ValidationError", m.attr("Error"));

  py::class_<FinitePoset>(m, "Poset")
      .def(py::init([](Labels elements, const std::vector<std::pair<std::string, std::string>>& relation,
                       bool allow_extrema) {
             return FinitePoset::from_labels(std::move(elements), relation, {.allow_extrema = allow_extrema});
           }),
           py::arg("elements"), py::arg("relation") = std::vector<std::pair<std::string, std::string>>{},
           py::arg("allow_extrema") = false)
      .def_property_readonly("labels", &FinitePoset::labels)
      .def("__len__", &FinitePoset::size)
      .def("leq", [](const FinitePoset& p, const std::string& a, const std::string& b) {
        return p.leq(p.index_of(a), p.index_of(b));
      })
      .def("principal_ideal", [](const FinitePoset& p, const std::string& x) {
        return labels(p, p.principal_ideal(p.index_of(x)));
      })
      .def("principal_filter", [](const FinitePoset& p, const std::string& x) {
        return labels(p, p.principal_filter(p.index_of(x)));
      })
      .def("upper_bounds", [](const FinitePoset& p, const Labels& a) { return labels(p, p.upper_bounds(subset(p, a))); })
      .def("lower_bounds", [](const FinitePoset& p, const Labels& a) { return labels(p, p.lower_bounds(subset(p, a))); })
      .def("maximal_elements",
           [](const FinitePoset& p, const Labels& a) { return labels(p, p.maximal_elements(subset(p, a))); })
      .def("is_cofinal_in", [](const FinitePoset& p, const Labels& b,
                               const Labels& a) { return p.is_cofinal_in(subset(p, b), subset(p, a)); })
      .def("is_directed", [](const FinitePoset& p, const Labels& a) { return p.is_directed(subset(p, a)); })
      .def("minimum", [](const FinitePoset& p) -> std::optional<std::string> {
        if (auto m = p.minimum()) return p.label(*m);
        return std::nullopt;
      })
      .def("maximum", [](const FinitePoset& p) -> std::optional<std::string> {
        if (auto m = p.maximum()) return p.label(*m);
        return std::nullopt;
      })
      .def("hasse_covers", [](const FinitePoset& p) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [a, b] : hasse_covers(p)) out.emplace_back(p.label(a), p.label(b));
        return out;
      })
      .def("to_dot", [](const FinitePoset& p) { return io::poset_dot(p); });

  py::class_<PosetMap>(m, "PosetMap")
      .def(py::init([](const FinitePoset& x, const FinitePoset& y, const std::map<std::string, std::string>& pairs) {
             std::vector<std::size_t> table(x.size());
             if (pairs.size() != x.size()) throw ValidationError("map not total");
             for (const auto& [from, to] : pairs) table.at(x.index_of(from)) = y.index_of(to);
             return PosetMap(x, y, std::move(table));
           }),
           py::arg("domain"), py::arg("codomain"), py::arg("pairs"))
      .def("__call__", [](const PosetMap& f, const std::string& x) {
        return f.codomain().label(f(f.domain().index_of(x)));
      })
      .def("is_increasing", &PosetMap::is_increasing)
      .def("is_oie", &PosetMap::is_oie);

  m.def("cut_closure", [](const FinitePoset& p, const Labels& a) {
    return labels(p, cut_closure(p, subset(p, a)).members());
  });
  m.def("is_cut", [](const FinitePoset& p, const Labels& a) { return is_cut(p, subset(p, a)); });
  m.def(
      "completion",
      [](const FinitePoset& p, const std::string& strategy) {
        CompletionOptions options;
        options.size_cap = default_size_cap();
        if (strategy == "naive") options.strategy = CompletionStrategy::Naive;
        else if (strategy == "generated") options.strategy = CompletionStrategy::Generated;
        else if (strategy != "auto") throw ValidationError("unknown strategy '" + strategy + "'");
        return to_python(io::completion_artifact(dedekind_completion(p, options)));
      },
      py::arg("poset"), py::arg("strategy") = "auto",
      "Completion as {cuts, order, embedding}, the same shape the CLI writes.");
  m.def("completion_dot", [](const FinitePoset& p) {
    CompletionOptions options;
    options.size_cap = default_size_cap();
    return io::completion_dot(dedekind_completion(p, options));
  });

  m.def("phi_sharp", [](const PosetMap& f, const Labels& a) {
    return labels(f.codomain(), phi_sharp(f, subset(f.domain(), a)).members());
  });
  m.def("phi_tilde", [](const PosetMap& f, const Labels& a) {
    return labels(f.codomain(), phi_tilde(f, subset(f.domain(), a)).members());
  });
  m.def(
      "phi_L",
      [](const PosetMap& f, const Labels& a, const py::object& selector) {
        return labels(f.codomain(), phi_L(f, selector_from(f.domain(), selector), subset(f.domain(), a)).members());
      },
      py::arg("phi"), py::arg("subset"), py::arg("selector") = "maximal",
      "selector is 'maximal', 'identity' or a list of (input, output) label lists.");
  m.def(
      "phi_bar",
      [](const PosetMap& f, const Labels& a, bool naive) {
        const auto strategy = naive ? BarStrategy::Naive : BarStrategy::Optimized;
        return labels(f.codomain(), phi_bar(f, subset(f.domain(), a), strategy).members());
      },
      py::arg("phi"), py::arg("subset"), py::arg("naive") = false);
  m.def("cofinal_subsets", [](const FinitePoset& p, const Labels& a) {
    std::vector<Labels> out;
    for (const auto& b : enumerate_cofinal_subsets(p, subset(p, a))) out.push_back(labels(p, b));
    return out;
  });

  m.def("parse_instance", [](const std::string& text, bool allow_extrema) {
    return to_python(io::to_json(io::parse_instance(text, {.allow_extrema = allow_extrema})));
  }, py::arg("text"), py::arg("allow_extrema") = false, "Validated, normalised instance document.");

  m.def("check_ids", [] {
    std::vector<std::string> out;
    for (const auto& info : verify::catalog()) out.push_back(info.id);
    return out;
  });
  m.def(
      "run_check",
      [](const std::string& id, std::uint64_t seed, std::size_t instances, std::size_t exhaustive_max) {
        verify::RunConfig config;
        config.seed = seed;
        config.instances = instances;
        config.exhaustive_max = exhaustive_max;
        return to_python(verify::to_json(verify::run_check(id, config)));
      },
      py::arg("check_id"), py::arg("seed") = 7, py::arg("instances") = 100, py::arg("exhaustive_max") = 5);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
