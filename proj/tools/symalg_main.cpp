// Command-line surface for the symalg library: exact computations in the
// group algebra of symmetric groups, batch-friendly JSON in and out.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "symalg/branching.hpp"
#include "symalg/characters.hpp"
#include "symalg/classify.hpp"
#include "symalg/config.hpp"
#include "symalg/dft.hpp"
#include "symalg/json_io.hpp"
#include "symalg/reference_tables.hpp"
#include "symalg/tensor.hpp"
#include "symalg/young.hpp"

namespace {

using nlohmann::json;
using namespace symalg;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

Partition parse_partition_arg(const std::string& text) {
  std::vector<int> parts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    parts.push_back(std::stoi(token));
  }
  return Partition(std::move(parts));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const json& j, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
  out << j.dump(2) << "\n";
}

Kind parse_kind(const std::string& text) {
  if (text == "symmetric") return Kind::symmetric;
  if (text == "alternating") return Kind::alternating;
  throw std::invalid_argument("kind must be 'symmetric' or 'alternating'");
}

int run_characters(int n, const std::string& format) {
  const CharacterTable table(n);
  if (format == "json") {
    std::cout << character_table_json(table).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "character table of S_" << n << " (rows: frames, columns: cycle types)\n";
  std::cout << "          ";
  for (const Partition& ct : table.partitions()) std::cout << ct.to_string() << "\t";
  std::cout << "\n";
  for (const Partition& lambda : table.partitions()) {
    std::cout << lambda.to_string() << "\t";
    for (const Partition& ct : table.partitions()) std::cout << table.value(lambda, ct) << "\t";
    std::cout << "\n";
  }
  return kExitOk;
}

int run_dft(int n, const std::string& input, bool inverse, const std::string& output) {
  const json in = read_json_file(input);
  if (inverse) {
    const FourierImage image = fourier_image_from_json(in);
    if (image.n() != n) throw std::invalid_argument("--n does not match the image in the file");
    write_output(json(inverse_dft(image)), output);
  } else {
    const GroupAlgebraElement element = element_from_json(in);
    if (element.degree() != n) throw std::invalid_argument("--n does not match the element degree");
    write_output(json(dft(element)), output);
  }
  return kExitOk;
}

int run_idempotents(int r, const std::string& kind_text, const std::string& format) {
  const Kind kind = parse_kind(kind_text);
  const GroupAlgebraElement e = subgroup_symmetrizer(r, kind);
  const GroupAlgebraElement f = full_symmetrizer(r, kind);
  const GroupAlgebraElement h = e - f;
  if (format == "json") {
    std::cout << json{{"r", r},
                      {"kind", kind_text},
                      {"e", e},
                      {"f", f},
                      {"h", h}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "e = " << e << "\n" << "f = " << f << "\n" << "h = " << h << "\n";
  }
  return kExitOk;
}

int run_decompose(const std::string& input, const std::string& lambda_text,
                  const std::string& output) {
  const GroupAlgebraElement e = element_from_json(read_json_file(input));
  const Partition lambda = parse_partition_arg(lambda_text);
  write_output(json(decompose(e, lambda)), output);
  return kExitOk;
}

int run_classify(int r, const std::string& frame_text, const std::string& against,
                 const std::string& format) {
  const Partition frame =
      frame_text.empty()
          ? [&] {
              std::vector<int> parts{2};
              parts.insert(parts.end(), static_cast<std::size_t>(r - 1), 1);
              if (against == "hs") parts = {r, 1};
              return Partition(parts);
            }()
          : parse_partition_arg(frame_text);
  if (frame.n() != r + 1) throw std::invalid_argument("--frame must be a partition of r+1");

  const GroupAlgebraElement h =
      h_component(r, against == "hs" ? Kind::symmetric : Kind::alternating);
  const std::vector<TableauVerdict> verdicts = classify_frame(h, frame);

  int reproduces = 0, annihilates = 0, neither = 0;
  for (const TableauVerdict& v : verdicts) {
    if (v.status == VerdictStatus::reproduces) ++reproduces;
    if (v.status == VerdictStatus::annihilates) ++annihilates;
    if (v.status == VerdictStatus::neither) ++neither;
  }

  if (format == "json") {
    std::cout << json{{"r", r},
                      {"frame", frame},
                      {"against", against},
                      {"counts",
                       {{"reproduces", reproduces}, {"annihilates", annihilates}, {"neither", neither}}},
                      {"verdicts", verdicts}}
                     .dump(2)
              << "\n";
  } else {
    for (const TableauVerdict& v : verdicts) std::cout << v << "\n";
    std::cout << "total " << verdicts.size() << ": " << reproduces << " reproduce, " << annihilates
              << " annihilate, " << neither << " neither\n";
  }
  return kExitOk;
}

int run_appendix(const std::vector<int>& rs) {
  bool all_match = true;
  for (int r : rs) {
    const ReferenceTables& expected = reference_tables(r);
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<std::size_t>(r - 1), 1);
    const Partition frame(parts);
    const auto verdicts = classify_frame(h_component(r, Kind::alternating), frame);

    std::set<std::string> got_repro, got_annih;
    for (const TableauVerdict& v : verdicts) {
      if (v.status == VerdictStatus::reproduces) got_repro.insert(v.tableau.to_string());
      if (v.status == VerdictStatus::annihilates) got_annih.insert(v.tableau.to_string());
    }
    std::set<std::string> want_repro, want_annih;
    for (const Tableau& t : expected.reproducing) want_repro.insert(t.to_string());
    for (const Tableau& t : expected.annihilating) want_annih.insert(t.to_string());

    const auto print_list = [](const std::set<std::string>& list) {
      for (const std::string& t : list) std::cout << "  " << t << "\n";
    };
    std::cout << got_repro.size() << " tableaux for r = " << r << " with h_a*e_t = h_a\n";
    print_list(got_repro);
    std::cout << (got_repro == want_repro ? "PASS" : "FAIL")
              << " reproducing list matches the bundled reference (r = " << r << ")\n";
    std::cout << got_annih.size() << " tableaux for r = " << r << " with h_a*e_t = 0\n";
    print_list(got_annih);
    std::cout << (got_annih == want_annih ? "PASS" : "FAIL")
              << " annihilating list matches the bundled reference (r = " << r << ")\n";
    all_match = all_match && got_repro == want_repro && got_annih == want_annih;
  }
  return all_match ? kExitOk : kExitVerificationFailure;
}

int run_verify_cdc(int dim, std::uint64_t seed, const std::string& type,
                   const std::string& u_class) {
  const DenseTensor s2 = symmetrize(random_tensor(2, dim, seed));
  const DenseTensor a2 = antisymmetrize(random_tensor(2, dim, seed + 1));
  const DenseTensor s3 = symmetrize(random_tensor(3, dim, seed + 2));

  const Kind kind = u_class == "hs" ? Kind::symmetric : Kind::alternating;
  const DenseTensor u =
      apply(star(h_component(2, kind)), nabla_surrogate(kind, 2, dim, seed + 3));

  DenseTensor candidate = [&] {
    if (type == "SU") return build_cdc_candidate(s2, u);
    if (type == "US") return build_cdc_candidate(u, s2);
    if (type == "AU") return build_cdc_candidate(a2, u);
    if (type == "UA") return build_cdc_candidate(u, a2);
    if (type == "SS'") return build_cdc_candidate(s2, s3);
    if (type == "S'S") return build_cdc_candidate(s3, s2);
    throw std::invalid_argument("--type must be one of SU, US, AU, UA, SS', S'S");
  }();

  const CdcReport report = verify_cdc_identities(candidate);
  const auto line = [](const char* name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
  };
  line("antisymmetric in the first index pair", report.antisymmetric_first_pair);
  line("antisymmetric in the second index pair", report.antisymmetric_second_pair);
  line("symmetric under pair interchange", report.pair_interchange);
  line("first cyclic identity", report.first_bianchi);
  line("second cyclic identity", report.second_bianchi);
  std::cout << (report.all_pass() ? "PASS" : "FAIL") << " type " << type << " at dim " << dim
            << ", seed " << seed << "\n";
  return report.all_pass() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact group-algebra computations for symmetric groups"};
  app.require_subcommand(1);

  int n = 0, r = 0, dim = 4;
  std::uint64_t seed = 0;
  bool inverse = false;
  std::string input, output, format = "json", kind_text = "symmetric";
  std::string lambda_text, frame_text, against = "ha", type, u_class = "ha";
  std::vector<int> appendix_rs;

  auto* characters_cmd = app.add_subcommand("characters", "Character table of S_n");
  characters_cmd->add_option("--n", n, "group degree")->required();
  characters_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* dft_cmd = app.add_subcommand("dft", "Fourier transform of a group-algebra element");
  dft_cmd->add_option("--n", n, "group degree")->required();
  dft_cmd->add_option("--input", input, "element (or image, with --inverse) JSON file")->required();
  dft_cmd->add_flag("--inverse", inverse, "apply the inverse transform");
  dft_cmd->add_option("--output", output, "write JSON here instead of stdout");

  auto* idempotents_cmd = app.add_subcommand("idempotents", "e, f and h = e - f for one r");
  idempotents_cmd->add_option("--r", r, "tensor order r (elements live in S_{r+1})")->required();
  idempotents_cmd->add_option("--kind", kind_text)->check(CLI::IsMember({"symmetric", "alternating"}))->required();
  idempotents_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "Branching decomposition of an idempotent");
  decompose_cmd->add_option("--input", input, "element JSON file")->required();
  decompose_cmd->add_option("--lambda", lambda_text, "frame of the element, e.g. \"2,1\"")->required();
  decompose_cmd->add_option("--output", output, "write JSON here instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "Tableau verdicts against h_a or h_s");
  classify_cmd->add_option("--r", r, "tensor order r")->required();
  classify_cmd->add_option("--frame", frame_text, "partition of r+1, e.g. \"2,1,1,1\"");
  classify_cmd->add_option("--against", against)->check(CLI::IsMember({"ha", "hs"}));
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* appendix_cmd = app.add_subcommand("appendix", "Reproduce the bundled reference lists");
  appendix_cmd->add_option("--r", appendix_rs, "orders to check (2, 3 and/or 4)")->required();

  auto* cdc_cmd = app.add_subcommand("verify-cdc", "Build an order-5 candidate and verify the curvature identities");
  cdc_cmd->add_option("--dim", dim, "vector space dimension")->required();
  cdc_cmd->add_option("--seed", seed, "seed for the deterministic tensor draws")->required();
  cdc_cmd->add_option("--type", type, "SU, US, AU, UA, SS' or S'S")->required();
  cdc_cmd->add_option("--u-class", u_class, "symmetry class of the order-3 factor U")
      ->check(CLI::IsMember({"ha", "hs"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (characters_cmd->parsed()) return run_characters(n, format);
    if (dft_cmd->parsed()) return run_dft(n, input, inverse, output);
    if (idempotents_cmd->parsed()) return run_idempotents(r, kind_text, format);
    if (decompose_cmd->parsed()) return run_decompose(input, lambda_text, output);
    if (classify_cmd->parsed()) return run_classify(r, frame_text, against, format);
    if (appendix_cmd->parsed()) return run_appendix(appendix_rs);
    if (cdc_cmd->parsed()) return run_verify_cdc(dim, seed, type, u_class);
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
