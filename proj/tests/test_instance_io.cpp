#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pcmax/instance_gen.hpp"
#include "pcmax/instance_io.hpp"

using namespace pcmax;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pcmax_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse and format") {
  const Instance inst = parse_instance("5 2\n2 3 2\n3 2\n");
  CHECK(inst.machines() == 2);
  CHECK(inst.size() == 5);
  CHECK(inst.total() == 12);
  CHECK(format_instance(inst) == "5 2\n2 3 2 3 2\n");
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance("   \n"), ParseError);
  CHECK_THROWS_AS(parse_instance("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 2\n1 -2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 2\n1 2.5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 0\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("x 2\n1\n"), ParseError);
}

TEST_CASE("file round trip") {
  const fs::path dir = scratch_dir("round_trip");
  const Instance inst = gen_lptrev_family(3);
  store_instance(dir / "fam.txt", inst);
  CHECK(load_instance(dir / "fam.txt") == inst);

  std::ofstream(dir / "empty.txt").close();
  CHECK_THROWS_AS(load_instance(dir / "empty.txt"), ParseError);
  CHECK_THROWS_AS(load_instance(dir / "missing.txt"), ParseError);
  fs::remove_all(dir);
}

TEST_CASE("suite round trip through the manifest") {
  const fs::path dir = scratch_dir("suite");
  const Suite suite = build_suite({{InstanceClass::nonuniform, 1, 1000, 5, 20, 7, 3},
                                   {InstanceClass::uniform, 1, 100, 3, 8, 8, 2}});
  write_suite(dir, suite);
  std::ifstream manifest(dir / kManifestName);
  std::string header, first;
  std::getline(manifest, header);
  std::getline(manifest, first);
  CHECK(header == "instance_id,file,class,a,b,m,n,seed,index,prng");
  CHECK(first == "0,inst_00000.txt,nonuniform,1,1000,5,20,7,0," + std::string(kPrngId));

  const Suite back = read_suite(dir);
  REQUIRE(back.entries.size() == 5);
  CHECK(back.instances == suite.instances);
  CHECK(back.entries[4].cls == InstanceClass::uniform);
  CHECK(back.entries[4].index == 1);

  // The manifest alone regenerates any instance.
  const auto& e = back.entries[4];
  GenSpec spec{e.cls, e.a, e.b, e.m, e.n, e.seed, static_cast<int>(e.index) + 1};
  CHECK(generate(spec).back() == back.instances[4]);
  fs::remove_all(dir);
}

TEST_CASE("manifest disagreeing with its file is rejected") {
  const fs::path dir = scratch_dir("mismatch");
  write_suite(dir, build_suite({{InstanceClass::uniform, 1, 100, 3, 8, 8, 1}}));
  std::ofstream(dir / "inst_00000.txt") << "3 3\n1 2 3\n";
  CHECK_THROWS_AS(read_suite(dir), ParseError);
  fs::remove_all(dir);
}
