#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "markov/braid.hpp"
#include "markov/certify.hpp"
#include "markov/error.hpp"
#include "markov/foliation.hpp"
#include "markov/invariants.hpp"
#include "markov/json_io.hpp"
#include "markov/unlink.hpp"

namespace markov {
namespace {

struct Options {
  std::uint64_t seed = 1;
  bool json = false;
  std::string csv;
  int max_moves = 30;
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
}

std::string describe(const Move& m) {
  std::string s(to_string(m.kind));
  if (m.sign) s += *m.sign > 0 ? "(+1)" : "(-1)";
  if (m.witness) s += "(" + m.witness->to_string() + ")";
  return s;
}

std::string join_trace(const std::vector<int>& trace) {
  std::string s;
  for (std::size_t i = 0; i < trace.size(); ++i) s += (i ? " " : "") + std::to_string(trace[i]);
  return s;
}

int cmd_normalize(const std::string& text, const Options& o, std::ostream& out) {
  const BraidWord w = BraidWord::parse(text);
  const BraidWord nf = normal_form(w);
  if (o.json) {
    const GarsideForm g = garside_form(w);
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : g.factors) factors.push_back(f.images());
    out << nlohmann::json{{"input", w.to_string()},
                          {"normal_form", nf.to_string()},
                          {"delta_power", g.delta_power},
                          {"factors", factors}}
               .dump(2)
        << '\n';
  } else {
    out << nf.to_string() << '\n';
  }
  return 0;
}

int cmd_invariants(const std::string& text, const Options& o, std::ostream& out) {
  const BraidWord w = BraidWord::parse(text);
  const int components = closure_component_count(w);
  const AlexanderPolynomial alex = alexander_of_closure(w);
  if (o.json) {
    nlohmann::json j{{"word", w.to_string()},
                     {"component_count", components},
                     {"exponent_sum", exponent_sum(w)},
                     {"alexander", alex.polynomial.to_string()}};
    if (components == 1) j["sl"] = self_linking(w);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "word: " << w.to_string() << '\n'
      << "component_count=" << components << '\n'
      << "exponent_sum=" << exponent_sum(w) << '\n';
  if (components == 1) out << "sl=" << self_linking(w) << '\n';
  out << "alexander=" << alex.polynomial.to_string() << '\n';
  return 0;
}

int cmd_move(const std::string& text, const std::string& kind, std::optional<int> sign,
             const std::string& witness, std::ostream& out) {
  const BraidWord w = BraidWord::parse(text);
  Move m;
  m.kind = move_kind_from_string(kind);
  m.sign = sign;
  if (m.kind == MoveKind::stabilize && !sign) throw Error(ErrorCode::InvalidArgument, "stabilize needs --sign");
  if (m.kind == MoveKind::conjugate) {
    if (witness.empty()) throw Error(ErrorCode::InvalidArgument, "conjugate needs --witness");
    m.witness = BraidWord::parse(witness);
  }
  out << apply_move(w, m).to_string() << '\n';
  return 0;
}

int cmd_simplify(const std::string& path, const Options& o, std::ostream& out) {
  const Tiling t = tiling_from_json(parse_json_text(read_file(path)));
  const SimplifyResult r = simplify_disc(t);
  const MoveCertificate& cert = r.certificate;
  const auto trace = cert.ledger_trace();
  const std::string cert_text = certificate_to_json(cert).dump(2) + "\n";
  if (!o.out_path.empty()) write_file(o.out_path, cert_text);
  if (o.json) {
    out << cert_text;
    return 0;
  }
  out << "vertices: " << t.vertices.size() << ", singularities: " << t.singularities.size()
      << ", negative vertices: " << t.negative_vertex_count() << '\n';
  out << "inessential b-arcs removed: " << r.inessential_removed << '\n';
  out << "moves:";
  for (const auto& m : cert.moves) out << ' ' << describe(m);
  out << '\n';
  out << "ledger: " << trace.front() << " -> " << trace.back() << '\n';
  out << "trace: " << join_trace(trace) << '\n';
  return 0;
}

int cmd_verify(const std::string& a_text, const std::string& b_text, const std::string& cert_path,
               const Options& o, std::ostream& out) {
  const BraidWord a = BraidWord::parse(a_text);
  const BraidWord b = BraidWord::parse(b_text);
  const MoveCertificate cert = certificate_from_json(parse_json_text(read_file(cert_path)));
  const VerificationReport r = verify_equivalence(a, b, cert);
  if (o.json) {
    nlohmann::json j{{"verdict", r.accepted() ? "accept" : "reject"},
                     {"replayed", r.replayed},
                     {"endpoint_matches", r.endpoint_matches},
                     {"components_agree", r.components_agree},
                     {"alarm", r.alarm},
                     {"ledger_trace", r.ledger_trace}};
    if (r.endpoint) j["endpoint"] = r.endpoint->to_string();
    if (!r.replayed) j["replay_error"] = r.replay_error;
    if (r.alexander_checked) j["alexander_agree"] = r.alexander_agree;
    out << j.dump(2) << '\n';
  } else {
    out << r.to_string();
  }
  return r.accepted() ? 0 : 1;
}

int cmd_unlink(const std::string& path, const Options& o, std::ostream& out) {
  const ColoredDiagram d = diagram_from_json(parse_json_text(read_file(path)));
  const SplitResult r = split_by_switches(d);
  const std::string cert_text = switches_to_json(r.certificate).dump(2) + "\n";
  if (!o.out_path.empty()) write_file(o.out_path, cert_text);
  if (o.json) {
    out << nlohmann::json{{"diagram", diagram_to_json(r.diagram)}, {"certificate", switches_to_json(r.certificate)}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "crossings: " << d.crossings.size() << '\n'
      << "green over red: " << green_over_red_count(d) << " -> " << green_over_red_count(r.diagram) << '\n'
      << "switched:";
  for (int id : r.certificate.switched) out << ' ' << id;
  out << '\n';
  return 0;
}

int cmd_bench(int count, const Options& o, std::ostream& out) {
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "--count must be non-negative");
  if (o.max_moves < 0 || static_cast<std::size_t>(o.max_moves) > kMaxGrowScript) {
    throw Error(ErrorCode::InvalidArgument, "--max-moves outside 0.." + std::to_string(kMaxGrowScript));
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> length(0, o.max_moves);
  std::ostringstream csv;
  csv << "script_length,initial_index,stabilizations,destabilizations,certificate_length\n";
  for (int i = 0; i < count; ++i) {
    const int len = length(rng);
    const auto script = random_grow_script(static_cast<std::size_t>(len), rng());
    const Tiling t = grow_disc(radial_disc(), script, rng());
    const MoveCertificate cert = simplify_disc(t).certificate;
    csv << len << ',' << cert.initial_index << ',' << cert.stabilization_count() << ','
        << cert.destabilization_count() << ',' << cert.moves.size() << '\n';
  }
  if (o.csv.empty()) {
    out << csv.str();
  } else {
    write_file(o.csv, csv.str());
    out << "wrote " << count << " rows to " << o.csv << '\n';
  }
  return 0;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidTiling:
    case ErrorCode::InvalidArgument:
    case ErrorCode::StrandMismatch:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid words, Markov moves and foliated-disc certificates", "markov"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "RNG seed for bench");
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_option("--csv", o.csv, "Write the bench table to this path");
  app.add_option("--max-moves", o.max_moves, "Longest grow script for bench")->capture_default_str();
  app.add_option("-o,--out", o.out_path, "Certificate output file");

  std::string word, word_b, path, kind, witness;
  std::optional<int> sign;
  int count = 100;

  auto* normalize = app.add_subcommand("normalize", "Print the Garside normal form");
  normalize->add_option("word", word, "Braid word, e.g. \"B3: s1 s2^-1\"")->required();
  auto* invariants = app.add_subcommand("invariants", "Components, exponent sum, sl, Alexander polynomial");
  invariants->add_option("word", word)->required();
  auto* move = app.add_subcommand("move", "Apply one Markov move");
  move->add_option("word", word)->required();
  move->add_option("kind", kind, "stabilize | destabilize | conjugate | cyclic_rotate")->required();
  move->add_option("--sign", sign);
  move->add_option("--witness", witness);
  auto* simplify = app.add_subcommand("simplify-disc", "Reduce a disc tiling and emit its certificate");
  simplify->add_option("tiling", path)->required();
  auto* verify = app.add_subcommand("verify", "Check a certificate between two words");
  verify->add_option("a", word)->required();
  verify->add_option("b", word_b)->required();
  verify->add_option("certificate", path)->required();
  auto* unlink = app.add_subcommand("unlink", "Switch green-over-red crossings");
  unlink->add_option("diagram", path)->required();
  auto* bench = app.add_subcommand("bench", "Grow and simplify random discs, emit CSV");
  bench->add_option("--count", count)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*normalize) return cmd_normalize(word, o, out);
    if (*invariants) return cmd_invariants(word, o, out);
    if (*move) return cmd_move(word, kind, sign, witness, out);
    if (*simplify) return cmd_simplify(path, o, out);
    if (*verify) return cmd_verify(word, word_b, path, o, out);
    if (*unlink) return cmd_unlink(path, o, out);
    if (*bench) return cmd_bench(count, o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return 2;
}

}  // namespace markov
