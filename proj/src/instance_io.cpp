#include "pcmax/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pcmax {
namespace {

template <typename T>
T to_number(std::string_view token, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(std::string("expected integer for ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

constexpr std::string_view kManifestHeader = "instance_id,file,class,a,b,m,n,seed,index,prng";

}  // namespace

Instance parse_instance(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string token;
  auto next = [&](const char* what) {
    if (!(is >> token)) throw ParseError(std::string("unexpected end of input reading ") + what);
    return token;
  };
  const auto n = to_number<long long>(next("n"), "n");
  const auto m = to_number<int>(next("m"), "m");
  if (n < 1) throw ParseError("instance needs n >= 1");
  if (m < 1) throw ParseError("instance needs m >= 1");
  std::vector<Time> times;
  times.reserve(static_cast<std::size_t>(n));
  for (long long j = 0; j < n; ++j) {
    const auto t = to_number<Time>(next("processing time"), "processing time");
    if (t < 0) throw ParseError("negative processing time");
    times.push_back(t);
  }
  if (is >> token) throw ParseError("more processing times than the header's n");
  return Instance(m, std::move(times));
}

std::string format_instance(const Instance& instance) {
  std::ostringstream os;
  os << instance.size() << ' ' << instance.machines() << '\n';
  // Written in input order so a load/store round trip preserves the file.
  std::vector<Time> in_order(instance.size());
  for (std::size_t j = 0; j < instance.size(); ++j) in_order[instance.original_index(j)] = instance.time(j);
  for (std::size_t j = 0; j < in_order.size(); ++j) {
    if (j > 0) os << ' ';
    os << in_order[j];
  }
  os << '\n';
  return os.str();
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void store_instance(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_instance(instance);
}

Suite build_suite(const std::vector<GenSpec>& specs) {
  Suite suite;
  for (const auto& spec : specs) {
    auto instances = generate(spec);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const std::size_t id = suite.instances.size();
      char name[32];
      std::snprintf(name, sizeof name, "inst_%05zu.txt", id);
      suite.entries.push_back({id, name, spec.cls, spec.a, spec.b, spec.m,
                               static_cast<int>(instances[i].size()), spec.seed, i});
      suite.instances.push_back(std::move(instances[i]));
    }
  }
  return suite;
}

std::vector<GenSpec> benchmark_suite_specs(std::uint64_t seed, int per_cell) {
  std::vector<GenSpec> specs;
  std::uint64_t cell = 0;
  for (auto cls : {InstanceClass::nonuniform, InstanceClass::uniform}) {
    for (Time b : {100, 1000, 10000}) {
      for (int m : {5, 10, 25}) {
        for (int n : {10, 50, 100, 500, 1000}) {
          if (m >= n) continue;
          specs.push_back({cls, 1, b, m, n, instance_seed(seed, cell++), per_cell});
        }
      }
    }
  }
  return specs;
}

void write_suite(const std::filesystem::path& dir, const Suite& suite) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / kManifestName);
  if (!manifest) throw std::runtime_error("cannot write manifest in " + dir.string());
  manifest << kManifestHeader << '\n';
  for (std::size_t i = 0; i < suite.entries.size(); ++i) {
    const auto& e = suite.entries[i];
    store_instance(dir / e.file, suite.instances[i]);
    manifest << e.instance_id << ',' << e.file << ',' << to_string(e.cls) << ',' << e.a << ','
             << e.b << ',' << e.m << ',' << e.n << ',' << e.seed << ',' << e.index << ','
             << kPrngId << '\n';
  }
}

Suite read_suite(const std::filesystem::path& dir) {
  std::ifstream manifest(dir / kManifestName);
  if (!manifest) throw ParseError("no manifest in " + dir.string());
  std::string line;
  if (!std::getline(manifest, line) || line != kManifestHeader) {
    throw ParseError("unexpected manifest header in " + dir.string());
  }
  Suite suite;
  while (std::getline(manifest, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) throw ParseError("malformed manifest row: " + line);
    SuiteEntry e;
    e.instance_id = to_number<std::size_t>(f[0], "instance_id");
    e.file = f[1];
    try {
      e.cls = parse_instance_class(f[2]);
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what());
    }
    e.a = to_number<Time>(f[3], "a");
    e.b = to_number<Time>(f[4], "b");
    e.m = to_number<int>(f[5], "m");
    e.n = to_number<int>(f[6], "n");
    e.seed = to_number<std::uint64_t>(f[7], "seed");
    e.index = to_number<std::size_t>(f[8], "index");
    Instance instance = load_instance(dir / e.file);
    if (instance.machines() != e.m || static_cast<int>(instance.size()) != e.n) {
      throw ParseError(e.file + " disagrees with its manifest row");
    }
    suite.entries.push_back(std::move(e));
    suite.instances.push_back(std::move(instance));
  }
  return suite;
}

}  // namespace pcmax
