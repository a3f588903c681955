// syzres: free resolutions of homogeneous ideals over prime fields.

#include "syz/agr.hpp"
#include "syz/io.hpp"
#include "syz/resolution.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

struct ResolveArgs {
  std::string input;
  std::string alg = "tree";
  std::size_t max_length = 0;
  std::string reorder = "negdegrevlex";
  bool minimize = false;
  std::string betti = "both";
  bool stats = false;
  bool verbose = false;
  bool kv = false;
  std::string image;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
};

std::string read_all(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size())))
    throw std::runtime_error("cannot write '" + path + "'");
}

int run_resolve(const ResolveArgs& a) {
  const syz::InputDocument doc = syz::parse_input(read_all(a.input));
  syz::ResolveOptions opt;
  opt.alg = syz::parse_lift_algorithm(a.alg);
  opt.reorder = syz::parse_reorder_policy(a.reorder);
  opt.threads = a.threads;
  if (a.max_length > 0)
    opt.max_length = a.max_length;

  syz::Resolution res = syz::resolve(doc.polys, 1, doc.ring.order, doc.ring.field, opt);
  const bool want_nonmin = a.betti == "nonmin" || a.betti == "both";
  const bool want_min = a.betti == "min" || a.betti == "both";
  if ((want_nonmin || want_min || a.minimize) && !res.graded)
    throw std::domain_error("the input is not homogeneous; Betti tables and minimization need "
                            "a graded resolution (use --betti none)");
  if (want_nonmin)
    std::cout << "non-minimal Betti table\n" << syz::format_betti(syz::betti_nonminimal(res));
  if (want_min) {
    if (want_nonmin)
      std::cout << "\n";
    std::cout << "minimal Betti table\n"
              << syz::format_betti(syz::betti_minimal_from_nonminimal(res));
  }
  if (a.stats) {
    if (want_nonmin || want_min)
      std::cout << "\n";
    std::cout << (a.kv ? syz::format_stats_kv(res) : syz::format_stats(res, a.verbose));
  }
  if (a.minimize)
    res = syz::minimize(std::move(res));
  if (!a.image.empty())
    for (std::size_t k = 1; k <= res.length(); ++k)
      write_file(a.image + "_phi" + std::to_string(k) + ".pgm", syz::pgm_image(res, k));
  if (!a.output.empty())
    write_file(a.output, syz::serialize_resolution(res, doc.ring));
  return 0;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i));
  return names;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free resolutions over prime fields via Schreyer's algorithm"};
  app.require_subcommand(1);

  ResolveArgs ra;
  auto* resolve = app.add_subcommand("resolve", "Resolve the ideal given in a file ('-' for stdin)");
  resolve->add_option("input", ra.input, "Input file")->required();
  resolve->add_option("--alg", ra.alg, "Lifting algorithm")
      ->check(CLI::IsMember({"schreyer", "reduce", "hybrid", "tree"}))
      ->capture_default_str();
  resolve->add_option("--max-length", ra.max_length, "Compute at most this many differentials");
  resolve->add_option("--reorder", ra.reorder, "Generator reordering between steps")
      ->check(CLI::IsMember({"negdegrevlex", "none", "input"}))
      ->capture_default_str();
  resolve->add_flag("--minimize", ra.minimize, "Minimize before writing the resolution and images");
  resolve->add_option("--betti", ra.betti, "Betti tables to print")
      ->check(CLI::IsMember({"min", "nonmin", "both", "none"}))
      ->capture_default_str();
  resolve->add_flag("--stats", ra.stats, "Print operation counts and Q_sparse");
  resolve->add_flag("--verbose", ra.verbose, "Per-differential statistics (includes timings)");
  resolve->add_flag("--kv", ra.kv, "Statistics as key=value lines");
  resolve->add_option("--image", ra.image, "Write <prefix>_phi<k>.pgm for every differential");
  resolve->add_option("--seed", ra.seed, "Accepted for symmetry with gen; resolve is deterministic");
  resolve->add_option("--threads", ra.threads, "Lifting threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  resolve->add_option("--output,-o", ra.output, "Write the resolution ('-' for stdout)");

  auto* gen = app.add_subcommand("gen", "Generate example ideals");
  gen->require_subcommand(1);
  syz::AgrParams params;
  auto* agr = gen->add_subcommand("agr", "Apolar ideal of a sum of s powers of linear forms");
  agr->add_option("--n", params.n, "Projective dimension (n+1 variables)")->capture_default_str();
  agr->add_option("--d", params.d, "Socle degree")->capture_default_str();
  agr->add_option("--s", params.s, "Number of linear forms")->capture_default_str();
  agr->add_option("--p", params.p, "Characteristic")->capture_default_str();
  agr->add_option("--seed", params.seed, "Random seed")->capture_default_str();

  std::size_t nvars = 4;
  std::vector<int> degrees{2, 2, 2};
  std::uint32_t p = 32003;
  std::uint64_t seed = 1;
  double density = 1.0;
  auto* random = gen->add_subcommand("random", "Random homogeneous forms");
  random->add_option("--vars", nvars, "Number of variables")
      ->check(CLI::Range(std::size_t{1}, syz::kMaxVariables))
      ->capture_default_str();
  random->add_option("--degrees", degrees, "Degrees of the forms")->delimiter(',');
  random->add_option("--p", p, "Characteristic")->capture_default_str();
  random->add_option("--seed", seed, "Random seed")->capture_default_str();
  random->add_option("--density", density, "Probability that a monomial is present")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*resolve)
      return run_resolve(ra);
    if (*agr) {
      const syz::AgrIdeal ideal = syz::gen_agr(params);
      syz::InputDocument doc;
      doc.ring.field = syz::PrimeField(params.p);
      doc.ring.vars = default_names(ideal.nvars);
      doc.polys = ideal.generators;
      std::cout << syz::format_input(doc);
      return 0;
    }
    if (*random) {
      syz::InputDocument doc;
      doc.ring.field = syz::PrimeField(p);
      doc.ring.vars = default_names(nvars);
      doc.polys = syz::gen_random_homogeneous(nvars, degrees, p, seed, density);
      std::cout << syz::format_input(doc);
      return 0;
    }
  } catch (const syz::ParseError& e) {
    std::cerr << "syzres: parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "syzres: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "syzres: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "syzres: internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
