// Python bindings. Subsets cross the boundary as lists of element labels.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmsets/calculus.hpp"
#include "qmsets/group.hpp"
#include "qmsets/lattice.hpp"
#include "qmsets/scenario.hpp"

namespace py = pybind11;
using namespace qmsets;

namespace {

Mask subset(const Universe& u, const std::vector<std::string>& labels) { return u.mask_of(labels); }

std::vector<std::string> labels(const Universe& u, Mask m) { return u.labels_of(m); }

SetPartition partition_from(const Universe& u, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<Mask> masks;
    for (const auto& b : blocks) masks.push_back(u.mask_of(b));
    return SetPartition(u, std::move(masks));
}

std::vector<std::vector<std::string>> block_labels(const SetPartition& p) {
    std::vector<std::vector<std::string>> out;
    for (Mask b : p.blocks()) out.push_back(p.universe().labels_of(b));
    return out;
}

py::tuple outcome_tuple(const Outcome& o) {
    return py::make_tuple(o.value.text(), to_string(o.probability), labels(o.collapsed.universe(), o.collapsed.subset()));
}

py::dict step_dict(const MeasurementStep& s) {
    py::dict d;
    d["attribute"] = s.attribute;
    d["value"] = s.value.text();
    d["probability"] = to_string(s.probability);
    d["pre"] = labels(s.pre.universe(), s.pre.subset());
    d["post"] = labels(s.post.universe(), s.post.subset());
    return d;
}

std::string run(const std::string& text, const std::string& format, std::optional<std::uint64_t> seed,
                bool cyclic_order) {
    scenario::RunOptions opt;
    opt.format = format == "csv" ? scenario::Format::Csv
               : format == "json" ? scenario::Format::Json
                                  : scenario::Format::Text;
    opt.seed = seed;
    opt.cyclic_order = cyclic_order;
    const auto s = scenario::parse_scenario(text, opt.bounds, seed.has_value());
    std::ostringstream out;
    scenario::run_scenario(s, opt, out);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_qmsets, m) {
    m.doc() = "Quantum mechanics over sets: GF(2) kets, partitions, attributes and measurement.";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<CompatibilityError>(m, "CompatibilityError", base.ptr());
    py::register_exception<BasisError>(m, "BasisError", base.ptr());
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<BoundExceeded>(m, "BoundExceeded", base.ptr());
    py::register_exception<EmptyStateError>(m, "EmptyStateError", base.ptr());
    py::register_exception<InvalidGroupError>(m, "InvalidGroupError", base.ptr());
    py::register_exception<ProcessError>(m, "ProcessError", base.ptr());
    py::register_exception<SemanticError>(m, "SemanticError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Universe>(m, "Universe")
        .def(py::init<std::string, std::vector<std::string>>(), py::arg("name"), py::arg("labels"))
        .def_property_readonly("name", &Universe::name)
        .def_property_readonly("labels", &Universe::labels)
        .def("__len__", &Universe::size)
        .def("__eq__", &Universe::operator==)
        .def("__repr__", [](const Universe& u) { return "Universe(" + u.name() + "=" + brace_list(u.labels()) + ")"; });

    py::class_<SetPartition>(m, "Partition")
        .def(py::init(&partition_from), py::arg("universe"), py::arg("blocks"))
        .def_static("parse", &parse_partition)
        .def_property_readonly("universe", &SetPartition::universe)
        .def_property_readonly("blocks", &block_labels)
        .def("__len__", &SetPartition::block_count)
        .def("__eq__", &SetPartition::operator==)
        .def("__str__", [](const SetPartition& p) { return to_string(p); })
        .def("__repr__", [](const SetPartition& p) { return "Partition(" + to_string(p) + ")"; });

    m.def("indiscrete", &indiscrete);
    m.def("discrete", &discrete);
    m.def("join", &join);
    m.def("refines", &refines, "True when p is at least as refined as q.");
    m.def("dit", [](const SetPartition& p) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [i, j] : dit(p).pairs()) out.emplace_back(p.universe().label(i), p.universe().label(j));
        return out;
    });
    m.def("logical_entropy", [](const SetPartition& p) { return to_string(logical_entropy(p)); },
          "Logical entropy as an exact fraction string.");
    m.def("enumerate_partitions", &enumerate_partitions, py::arg("universe"),
          py::arg("bound") = kDefaultPartitionBound);
    m.def("block_sizes", &block_sizes);
    m.def("render_lattice", [](const Universe& u, std::size_t bound) { return render_lattice(build_lattice(u, bound)); },
          py::arg("universe"), py::arg("bound") = kDefaultPartitionBound);

    py::class_<Basis>(m, "Basis")
        .def_static("standard", &Basis::standard)
        .def_property_readonly("name", &Basis::name)
        .def_property_readonly("labels", &Basis::labels)
        .def_property_readonly("vectors", [](const Basis& b) {
            std::vector<std::vector<std::string>> out;
            for (Mask v : b.vectors()) out.push_back(b.universe().labels_of(v));
            return out;
        })
        .def("__eq__", &Basis::operator==);

    m.def("check_basis",
          [](const Universe& u, std::string name, const std::vector<std::vector<std::string>>& vectors,
             std::vector<std::string> vector_labels) {
              std::vector<Mask> masks;
              for (const auto& v : vectors) masks.push_back(u.mask_of(v));
              return check_basis(u, std::move(name), std::move(masks), std::move(vector_labels));
          },
          py::arg("universe"), py::arg("name"), py::arg("vectors"), py::arg("labels") = std::vector<std::string>{});

    py::class_<SetKet>(m, "SetKet")
        .def(py::init([](const Basis& b, const std::vector<std::string>& coords) {
                 return SetKet(b, b.coords_of_labels(coords));
             }),
             py::arg("basis"), py::arg("coords"))
        .def_static("from_subset", [](const Universe& u, const std::vector<std::string>& s) {
            return SetKet::from_subset(u, subset(u, s));
        })
        .def_property_readonly("basis", &SetKet::basis)
        .def_property_readonly("subset", [](const SetKet& k) { return labels(k.universe(), k.subset()); })
        .def("format", &SetKet::format)
        .def("__eq__", &SetKet::operator==)
        .def("__add__", &add)
        .def("__repr__", [](const SetKet& k) { return "SetKet(" + k.basis().name() + ":" + k.format() + ")"; });

    m.def("to_basis", &to_basis);
    m.def("ket_table",
          [](const std::vector<Basis>& bases, bool cyclic_order) {
              std::vector<std::vector<std::string>> rows;
              for (const auto& row : ket_table(bases, cyclic_order ? KetOrder::Cyclic : KetOrder::Binary).rows) {
                  std::vector<std::string> cells;
                  for (const auto& k : row) cells.push_back(k.format());
                  rows.push_back(std::move(cells));
              }
              return rows;
          },
          py::arg("bases"), py::arg("cyclic_order") = false);

    py::class_<LinearMap>(m, "LinearMap")
        .def_static("permutation", [](const Universe& u, const std::vector<std::size_t>& image) {
            return LinearMap::permutation(u, image);
        })
        .def(py::init([](const Basis& domain, const Basis& codomain, const std::vector<std::vector<std::string>>& columns) {
                 std::vector<Mask> cols;
                 for (const auto& c : columns) cols.push_back(codomain.coords_of_labels(c));
                 return LinearMap(domain, codomain, std::move(cols));
             }),
             py::arg("domain"), py::arg("codomain"), py::arg("columns"));
    m.def("apply_map", &apply_map);
    m.def("is_nonsingular", &is_nonsingular);
    m.def("evolve", &evolve);

    py::class_<Attribute>(m, "Attribute")
        .def(py::init([](std::string name, const Universe& u, const std::vector<std::string>& values) {
                 return Attribute(std::move(name), u, std::vector<Value>(values.begin(), values.end()));
             }),
             py::arg("name"), py::arg("universe"), py::arg("values"))
        .def_property_readonly("name", &Attribute::name)
        .def("range", [](const Attribute& f) {
            std::vector<std::string> out;
            for (const auto& v : f.range()) out.push_back(v.text());
            return out;
        })
        .def("preimage", [](const Attribute& f, const std::string& r) { return labels(f.universe(), f.preimage(r)); });

    m.def("inverse_image_partition", &inverse_image_partition);
    m.def("is_csca", [](const std::vector<Attribute>& fs) { return is_csca(AttributeSet(fs)); });

    py::class_<Permutation>(m, "Permutation")
        .def_static("parse", &parse_cycles)
        .def("__str__", &to_cycles)
        .def("__eq__", &Permutation::operator==);
    py::class_<TransformationGroup>(m, "TransformationGroup")
        .def_property_readonly("order", &TransformationGroup::order);
    m.def("generate_group", &generate_group, py::arg("universe"), py::arg("generators"),
          py::arg("bound") = kDefaultGroupBound);
    m.def("orbit_partition", &orbit_partition);

    m.def("bracket", [](const SetKet& t, const SetKet& s) { return bracket(t, s).value; });
    m.def("norm_squared", [](const SetKet& s) { return norm(s).squared; });
    m.def("born_distribution", [](const SetKet& s) {
        py::list out;
        for (const auto& o : born_distribution(s).outcomes) out.append(outcome_tuple(o));
        return out;
    });
    m.def("measure_distribution",
          [](const Attribute& f, const SetKet& s) {
              py::list out;
              for (const auto& o : measure_distribution(f, s).outcomes) out.append(outcome_tuple(o));
              return out;
          },
          "List of (value, probability fraction, collapsed subset).");
    m.def("measure_sample", [](const Attribute& f, const SetKet& s, std::uint64_t seed, std::uint64_t step) {
        return step_dict(measure_sample(f, s, seed, step));
    }, py::arg("f"), py::arg("s"), py::arg("seed"), py::arg("step") = 0);
    m.def("csca_measure", [](const std::vector<Attribute>& fs, const SetKet& s, std::uint64_t seed) {
        py::list out;
        for (const auto& st : csca_measure(AttributeSet(fs), s, seed).steps) out.append(step_dict(st));
        return out;
    });
    m.def("pythagoras_check", &pythagoras_check);

    m.def("run_scenario", &run, py::arg("text"), py::arg("format") = "text", py::arg("seed") = py::none(),
          py::arg("cyclic_order") = false, "Parse and run scenario text; returns what the CLI would print.");
}
