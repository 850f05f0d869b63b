#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "argbelief/argumentation.hpp"
#include "argbelief/doxastics.hpp"
#include "argbelief/generator.hpp"
#include "argbelief/io.hpp"
#include "argbelief/logic.hpp"
#include "argbelief/probabilistic.hpp"
#include "argbelief/sweep.hpp"

namespace py = pybind11;
namespace ab = argbelief;

namespace {

using Labels = std::vector<std::string>;

py::object to_python(const ab::json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

ab::json from_python(const py::object& obj) {
  return ab::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

std::vector<Labels> family_labels(const ab::Domain& d, const std::vector<ab::PropositionSet>& family) {
  std::vector<Labels> out;
  for (const auto& s : family) out.push_back(d.label_list(s));
  return out;
}

ab::ModelOptions options(bool strict, bool close, std::size_t max_worlds) {
  ab::ModelOptions o;
  o.strict = strict;
  o.close = close;
  o.max_worlds = max_worlds;
  return o;
}

py::dict verdict(const ab::Domain& d, const ab::BeliefVerdict& v) {
  py::dict out;
  out["believed"] = v.believed;
  out["witness"] = v.witness ? py::cast(d.label_list(*v.witness)) : py::none();
  out["notion"] = std::string(ab::to_string(v.notion));
  return out;
}

py::list axiom_rows(const ab::Domain& d, const ab::AxiomReport& report) {
  py::list rows;
  for (const auto& r : report.results) {
    py::dict row;
    row["schema"] = r.name;
    row["formula"] = r.formula;
    row["in_axiom_system"] = r.in_axiom_system;
    row["valid"] = r.valid;
    row["witness"] = family_labels(d, r.witness);
    rows.append(row);
  }
  return rows;
}

ab::OpenFamily family_from(const ab::Model& m, const std::vector<Labels>& family) {
  std::vector<ab::PropositionSet> sets;
  for (const auto& labels : family) sets.push_back(m.domain().make_set(labels));
  return m.attack().family_of(sets);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Topological argumentation models of belief";

  static py::exception<ab::Error> error(m, "ArgbeliefError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ab::Error& e) {
      py::tuple args = py::make_tuple(std::string(ab::to_string(e.kind())), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<ab::Model>(m, "Model")
      .def_static(
          "from_json",
          [](const py::object& doc, bool strict, bool close, std::size_t max_worlds) {
            return ab::model_from_json(from_python(doc), options(strict, close, max_worlds));
          },
          py::arg("doc"), py::arg("strict") = false, py::arg("close") = false, py::arg("max_worlds") = 16)
      .def_static(
          "load",
          [](const std::string& path, bool strict, bool close, std::size_t max_worlds) {
            return ab::model_from_json(ab::read_json_file(path), options(strict, close, max_worlds));
          },
          py::arg("path"), py::arg("strict") = false, py::arg("close") = false, py::arg("max_worlds") = 16)
      .def_property_readonly("worlds", [](const ab::Model& self) { return self.domain().labels(); })
      .def_property_readonly("evidence",
                             [](const ab::Model& self) { return family_labels(self.domain(), self.evidence()); })
      .def_property_readonly(
          "opens", [](const ab::Model& self) { return family_labels(self.domain(), self.topology().opens()); })
      .def_property_readonly(
          "grounded", [](const ab::Model& self) { return family_labels(self.domain(), self.grounded_sets()); })
      .def_property_readonly("iterations", [](const ab::Model& self) { return self.grounded().iterations.size(); })
      .def_property_readonly("warnings", &ab::Model::warnings)
      .def(
          "believes",
          [](const ab::Model& self, const Labels& prop, const std::string& notion) {
            const auto set = self.domain().make_set(prop);
            return verdict(self.domain(), ab::believes(self, set, ab::parse_belief_notion(notion)));
          },
          py::arg("proposition"), py::arg("notion") = "grounded")
      .def(
          "extension",
          [](const ab::Model& self, const std::string& formula, bool unknown_atoms_empty) {
            ab::EvaluationOptions o;
            o.unknown_atoms_empty = unknown_atoms_empty;
            return self.domain().label_list(ab::extension(self, ab::parse_formula(formula), o));
          },
          py::arg("formula"), py::arg("unknown_atoms_empty") = false)
      .def("justifications",
           [](const ab::Model& self) { return family_labels(self.domain(), ab::justification_set(self).opens); })
      .def("axioms", [](const ab::Model& self) { return axiom_rows(self.domain(), ab::check_axioms(self)); })
      .def("compare",
           [](const ab::Model& self) {
             const auto cmp = ab::compare_beliefs(self);
             py::list rows;
             for (const auto& r : cmp.rows) {
               py::dict row;
               row["proposition"] = self.domain().label_list(r.proposition);
               row["grounded"] = r.grounded;
               row["evidence_based"] = r.evidence_based;
               rows.append(row);
             }
             py::dict out;
             out["rows"] = rows;
             out["consistent"] = cmp.consistent();
             return out;
           })
      .def("validate",
           [](const ab::Model& self) {
             py::list out;
             for (const auto& v : ab::validate_attack(self.attack())) {
               py::dict row;
               row["condition"] = v.condition;
               row["witness"] = family_labels(self.domain(), v.witness);
               row["description"] = v.description;
               out.append(row);
             }
             return out;
           })
      .def(
          "classify",
          [](const ab::Model& self, const std::vector<Labels>& family, bool preferred) {
            ab::ClassifyOptions o;
            o.compute_preferred = preferred;
            const auto flags = ab::classify_extension(self.attack(), family_from(self, family), o);
            py::dict out;
            out["conflict_free"] = flags.conflict_free;
            out["admissible"] = flags.admissible;
            out["complete"] = flags.complete;
            out["stable"] = flags.stable;
            out["preferred"] = flags.preferred ? py::cast(*flags.preferred) : py::none();
            return out;
          },
          py::arg("family"), py::arg("preferred") = true)
      .def("to_neighborhood",
           [](const ab::Model& self) {
             return family_labels(self.domain(), ab::to_neighborhood(self).neighborhood());
           })
      .def("to_json", [](const ab::Model& self) { return to_python(ab::model_to_json(self)); })
      .def("to_dot", [](const ab::Model& self) { return ab::to_dot(self.attack(), self.domain().labels()); });

  py::class_<ab::ProbabilisticModel>(m, "ProbabilisticModel")
      .def_static("from_json",
                  [](const py::object& doc) { return ab::probabilistic_from_json(from_python(doc)); })
      .def_static("load", [](const std::string& path) { return ab::probabilistic_from_json(ab::read_json_file(path)); })
      .def_property_readonly("worlds", [](const ab::ProbabilisticModel& self) { return self.domain().labels(); })
      .def_property_readonly("masses",
                             [](const ab::ProbabilisticModel& self) {
                               std::vector<std::string> out;
                               for (const auto& q : self.masses()) out.push_back(ab::format_rational(q));
                               return out;
                             })
      .def(
          "believes",
          [](const ab::ProbabilisticModel& self, const std::string& formula, const std::string& threshold) {
            return ab::believes_probabilistic(self, ab::parse_formula(formula), ab::parse_rational(threshold));
          },
          py::arg("formula"), py::arg("threshold") = "1/2")
      .def("correspondence",
           [](const ab::ProbabilisticModel& self) {
             const auto& d = self.domain();
             const auto r = ab::pb_grounded_correspondence(self);
             py::dict out;
             out["holds"] = r.holds();
             out["grounded"] = family_labels(d, r.grounded);
             out["above_half"] = family_labels(d, r.above_half);
             out["attack_valid"] = r.attack_valid;
             out["conditionally_transitive"] = r.conditionally_transitive;
             return out;
           })
      .def("to_model", [](const ab::ProbabilisticModel& self) { return ab::to_argumentation_model(self); })
      .def("to_json", [](const ab::ProbabilisticModel& self) { return to_python(ab::probabilistic_to_json(self)); });

  m.def(
      "random_model",
      [](std::size_t worlds, std::uint64_t seed, const std::string& mode, double density) {
        ab::GeneratorConfig c;
        c.world_count = worlds;
        c.seed = seed;
        c.mode = ab::parse_generator_mode(mode);
        c.evidence_density = density;
        return ab::generate_case(c).model;
      },
      py::arg("worlds") = 3, py::arg("seed") = 0, py::arg("mode") = "explicit", py::arg("density") = 0.4);

  m.def(
      "sweep",
      [](const std::vector<std::string>& properties, const std::vector<std::string>& modes, std::uint64_t seeds,
         std::size_t min_worlds, std::size_t max_worlds, double density) {
        std::vector<ab::GeneratorConfig> configs;
        const std::size_t span = max_worlds >= min_worlds ? max_worlds - min_worlds + 1 : 1;
        for (const auto& mode : modes) {
          for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
            ab::GeneratorConfig c;
            c.seed = seed;
            c.mode = ab::parse_generator_mode(mode);
            c.world_count = min_worlds + (seed - 1) % span;
            c.evidence_density = density;
            configs.push_back(c);
          }
        }
        return to_python(ab::run_sweep(properties, configs).to_json());
      },
      py::arg("properties"), py::arg("modes") = std::vector<std::string>{"explicit"}, py::arg("seeds") = 100,
      py::arg("min_worlds") = 1, py::arg("max_worlds") = 4, py::arg("density") = 0.4);

  m.def("properties", [] {
    std::vector<std::string> out;
    for (const auto& p : ab::property_registry()) out.push_back(p.name);
    return out;
  });

  m.def(
      "format_formula", [](const std::string& text) { return ab::to_string(ab::parse_formula(text)); },
      py::arg("text"));
}
