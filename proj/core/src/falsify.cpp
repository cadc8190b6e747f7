#include "d2tk/falsify.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "d2tk/catalog.hpp"
#include "d2tk/color.hpp"
#include "d2tk/discharge.hpp"
#include "d2tk/error.hpp"
#include "d2tk/gen.hpp"
#include "d2tk/rotg.hpp"

namespace d2tk {

namespace {

void persist(const std::string& dir, const GraphRecord& rec, const PlaneGraph& g) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::string stem = dir + "/graph-" + std::to_string(rec.seed) + "-" + std::to_string(rec.id);
  std::ofstream(stem + ".rotg") << to_rotg(g);
  std::ofstream side(stem + ".txt");
  side << "id " << rec.id << "\nseed " << rec.seed << "\nmode " << rec.mode << "\ndelta "
       << rec.delta << "\n";
  for (const auto& v : rec.violations) side << "violation " << v << "\n";
}

}  // namespace

int RunReport::passed() const {
  int c = 0;
  for (const auto& g : graphs) c += g.ok();
  return c;
}

int RunReport::violations() const {
  int c = 0;
  for (const auto& g : graphs) c += static_cast<int>(g.violations.size());
  return c;
}

PlaneGraph falsify_graph(const FalsifyOptions& opt, int index, std::string* mode) {
  GenSpec spec;
  spec.seed = mix_seed(opt.seed, static_cast<uint64_t>(index));
  spec.n_target = opt.n;
  spec.mode = index % 2 == 0 ? GenMode::Triangulation : GenMode::Subsampled;
  spec.edge_keep_probability = opt.keep;
  spec.delta_filter = {6, 7, 8};
  if (mode) *mode = index % 2 == 0 ? "triangulation" : "subsampled";
  return generate(spec);
}

GraphRecord check_graph(const PlaneGraph& g, bool color) {
  GraphRecord rec;
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.delta = g.max_degree();
  auto fail = [&](std::string what) { rec.violations.push_back(std::move(what)); };
  try {
    auto ledger = apply_rules(g, rule_set(rec.delta));
    if (ledger.total_initial() != -8 || ledger.total_final() != -8)
      fail("conservation: initial " + format_charge(ledger.total_initial()) + ", final " +
           format_charge(ledger.total_final()));
    rec.negative = static_cast<int>(negativity_report(ledger).size());

    auto found = detect(g, rec.delta);
    rec.detections = static_cast<int>(found.size());
    if (found.empty()) fail("detect: no configuration");
    if (rec.negative > 0 && found.empty()) fail("linkage: negative charge without a configuration");
    for (const auto& c : found) {
      auto cert = certify(g, c);
      if (cert.passed()) {
        ++rec.certified;
        continue;
      }
      ++rec.cert_failed;
      if (!cert.delta_ok) ++rec.delta_failed;
      std::ostringstream why;
      why << "certificate: " << format_configuration(c) << " proper=" << cert.proper
          << " shrinks=" << cert.shrinks << " headroom=" << cert.headroom
          << " delta_ok=" << cert.delta_ok;
      fail(why.str());
    }
  } catch (const std::exception& e) {
    fail(std::string("error: ") + e.what());
  }
  if (color) {
    try {
      auto cert = color_constructive(g);
      rec.palette = cert.palette_size;
      rec.method = cert.method;
      if (!cert.valid) fail("coloring: invalid");
      for (const auto& s : cert.trace)
        if (s.id.empty()) fail("coloring: " + s.note);
    } catch (const std::exception& e) {
      fail(std::string("coloring: ") + e.what());
    }
  }
  return rec;
}

RunReport run_falsify(const FalsifyOptions& opt) {
  RunReport out;
  out.graphs.resize(std::max(opt.count, 0));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < opt.count; i = next++) {
      GraphRecord rec;
      std::string mode;
      PlaneGraph g;
      try {
        g = falsify_graph(opt, i, &mode);
        rec = check_graph(g, opt.color);
      } catch (const std::exception& e) {
        rec.violations.push_back(std::string("generate: ") + e.what());
      }
      rec.id = i;
      rec.seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
      rec.mode = mode;
      if (!rec.ok() && !opt.findings_dir.empty() && g.num_vertices() > 0)
        persist(opt.findings_dir, rec, g);
      out.graphs[i] = std::move(rec);
    }
  };
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, opt.count));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::string format_report(const RunReport& r) {
  std::ostringstream out;
  for (const auto& g : r.graphs) {
    out << "graph " << g.id << " seed=" << g.seed << " mode=" << g.mode << " n=" << g.n
        << " m=" << g.m << " delta=" << g.delta << " detections=" << g.detections
        << " certified=" << g.certified << "/" << g.certified + g.cert_failed
        << " negative=" << g.negative;
    if (!g.method.empty())
      out << " palette=" << g.palette << "/" << 2 * g.delta + 7 << " method=" << g.method;
    out << (g.ok() ? " ok" : " FAIL") << "\n";
    for (const auto& v : g.violations) out << "  " << v << "\n";
  }
  out << "total graphs=" << r.graphs.size() << " passed=" << r.passed()
      << " violations=" << r.violations() << "\n";
  return out.str();
}

}  // namespace d2tk
