#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "richardson/classifier.hpp"
#include "richardson/cli.hpp"
#include "richardson/exceptional.hpp"
#include "richardson/matrix_oracle.hpp"
#include "richardson/partition_engine.hpp"
#include "richardson/records.hpp"

namespace py = pybind11;
using namespace richardson;

namespace {

BlockVector make_blocks(const std::string& kind, std::vector<int> d, std::optional<int> central) {
  return BlockVector(LieKind::parse(kind), std::move(d), central);
}

Coloring make_coloring(const std::string& kind, std::vector<int> u) {
  return Coloring(LieKind::parse(kind), std::move(u));
}

py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict report_dict(const ClassificationReport& rep) {
  py::dict d = from_json(to_json(to_record(rep)));
  d["partition_source"] = rep.partition_source.empty() ? py::object(py::none())
                                                       : py::object(py::str(rep.partition_source));
  d["oracle_certified"] = rep.oracle_certified;
  d["birational_partition_route"] = rep.birational_partition_route;
  d["diagnostics"] = rep.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Richardson elements in the first graded part and birationality of the moment map.";

  static py::exception<Error> exc(m, "RichardsonError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("classify",
        [](const std::string& kind, std::optional<std::vector<int>> blocks,
           std::optional<int> central, std::optional<std::vector<int>> coloring, bool oracle,
           int trials, std::uint64_t seed) {
          ClassifyOptions opts;
          opts.use_oracle = oracle;
          opts.trials = trials;
          opts.seed = seed;
          if (blocks.has_value() == coloring.has_value())
            throw Error(ErrorCode::kParseError, "give exactly one of blocks and coloring");
          if (coloring) return report_dict(classify(make_coloring(kind, *coloring), opts));
          return report_dict(classify(make_blocks(kind, *blocks, central), opts));
        },
        py::arg("kind"), py::arg("blocks") = py::none(), py::arg("central") = py::none(),
        py::arg("coloring") = py::none(), py::arg("oracle") = false, py::arg("trials") = 3,
        py::arg("seed") = 1,
        "Classify a parabolic given by half-palindrome blocks (plus central block) or a "
        "coloring. Returns the output record as a dict.");

  m.def("richardson_partition",
        [](const std::string& kind, std::vector<int> blocks, std::optional<int> central) {
          return richardson_partition(make_blocks(kind, std::move(blocks), central)).parts();
        },
        py::arg("kind"), py::arg("blocks"), py::arg("central") = py::none());
  m.def("dual_partition",
        [](const std::string& kind, std::vector<int> blocks, std::optional<int> central) {
          return richardson_dual_partition_BCD(make_blocks(kind, std::move(blocks), central))
              .parts();
        },
        py::arg("kind"), py::arg("blocks"), py::arg("central") = py::none());
  m.def("rank_and_kernel",
        [](const std::string& kind, std::vector<int> blocks, std::optional<int> central) {
          const RankKernel rk =
              richardson_rank_and_kernel(make_blocks(kind, std::move(blocks), central));
          return py::make_tuple(rk.rank, rk.kernel_dim);
        },
        py::arg("kind"), py::arg("blocks"), py::arg("central") = py::none());

  m.def("transpose", [](std::vector<int> p) { return transpose(Partition(std::move(p))).parts(); },
        py::arg("partition"));
  m.def("n_odd", [](std::vector<int> p) { return n_odd(Partition(std::move(p))); },
        py::arg("partition"));
  m.def("b_set", [](std::vector<int> p, int eps) { return b_set(Partition(std::move(p)), eps); },
        py::arg("partition"), py::arg("epsilon"));
  m.def("jordan_from_kernel_dims",
        [](std::vector<int> k) { return jordan_from_kernel_dims(k).parts(); },
        py::arg("kernel_dims"));

  m.def("blocks_from_coloring",
        [](const std::string& kind, std::vector<int> u) {
          const BlockVector b = blocks_from_coloring(make_coloring(kind, std::move(u)));
          return py::make_tuple(b.d(), b.central());
        },
        py::arg("kind"), py::arg("coloring"), "Returns (d, central).");
  m.def("coloring_from_blocks",
        [](const std::string& kind, std::vector<int> blocks, std::optional<int> central) {
          return coloring_from_blocks(make_blocks(kind, std::move(blocks), central)).u();
        },
        py::arg("kind"), py::arg("blocks"), py::arg("central") = py::none());

  auto check = [&m](const char* name, auto fn) {
    m.def(name,
          [fn](const std::string& kind, std::vector<int> blocks, std::optional<int> central) {
            return fn(make_blocks(kind, std::move(blocks), central));
          },
          py::arg("kind"), py::arg("blocks"), py::arg("central") = py::none());
  };
  check("is_nice", [](const BlockVector& b) { return nice_check(b); });
  check("is_birational", [](const BlockVector& b) { return birational_via_blocks(b); });
  check("is_sl2", [](const BlockVector& b) { return sl2_check(b); });
  check("normal_closure",
        [](const BlockVector& b) { return std::string(to_string(normal_closure_check(b))); });
  check("covering_degree", [](const BlockVector& b) { return covering_degree(b).degree; });

  m.def("oracle_partition",
        [](const std::string& kind, std::vector<int> blocks, std::optional<int> central,
           int trials, std::uint64_t seed) {
          const OracleResult r = oracle_richardson_partition(
              make_blocks(kind, std::move(blocks), central), trials, seed);
          py::dict d;
          d["partition"] = r.partition.parts();
          d["certified"] = r.certified;
          d["seed"] = r.seed;
          d["centralizer_dim"] = r.centralizer_dim;
          d["levi_dim"] = r.levi_dim;
          d["warnings"] = r.warnings;
          return d;
        },
        py::arg("kind"), py::arg("blocks"), py::arg("central") = py::none(),
        py::arg("trials") = 3, py::arg("seed") = 1,
        "Jordan type of a random nilradical element, certified by dim g^X = dim m.");

  m.def("exceptional_lookup",
        [](const std::string& kind, std::vector<int> u) {
          const ExceptionalRecord r = exceptional_lookup(make_coloring(kind, std::move(u)));
          py::dict d;
          d["kind"] = r.kind.name();
          d["coloring"] = r.coloring.u();
          d["in_appendix"] = r.in_appendix;
          d["nice"] = r.nice;
          d["birational"] = r.birational;
          d["sl2"] = r.sl2_given;
          d["orbit_dim"] = r.orbit_dim;
          d["label"] = r.bala_carter_label;
          d["row"] = r.appendix_row;
          return d;
        },
        py::arg("kind"), py::arg("coloring"));
  m.def("orbit_dim",
        [](const std::string& kind, std::vector<int> u) {
          const Coloring c = make_coloring(kind, std::move(u));
          return orbit_dim(root_system(c.kind().family()), c);
        },
        py::arg("kind"), py::arg("coloring"));
  m.def("grading_dims",
        [](const std::string& kind, std::vector<int> u) {
          const Coloring c = make_coloring(kind, std::move(u));
          return grading_dims(root_system(c.kind().family()), c).dims;
        },
        py::arg("kind"), py::arg("coloring"));
  m.def("positive_roots",
        [](const std::string& kind) {
          return root_system(LieKind::parse(kind).family()).positive_roots;
        },
        py::arg("kind"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");
}
