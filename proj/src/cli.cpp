#include "calisson/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "calisson/counting.hpp"
#include "calisson/height.hpp"
#include "calisson/plane_partition.hpp"
#include "calisson/render.hpp"
#include "calisson/tiling.hpp"

namespace calisson {

namespace {

enum Exit { kOk = 0, kNo = 1, kInput = 2, kDisagree = 3 };

struct Options {
  std::string format = "ascii";
  int scale = 24;
  std::uint64_t seed = 0;
  std::size_t limit = kDefaultTilingLimit;

  std::string region;
  std::string tiling;
  std::string tiling2;
  std::string method = "det";
  bool show_heights = false;
  bool show_colors = false;
  bool use_min = false;
  bool use_max = false;
  std::string partition;
  std::vector<int> box;
  std::string lattice = "square";
  std::vector<int> sizes;
  int cells = 0;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Region load_region(const std::string& path) { return parse_region(read_file(path)); }

Tiling load_tiling(const Region& region, const std::string& path) {
  return parse_tiling(region, read_file(path));
}

std::string signature_text(const FlowSignature& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::optional<BigInt> formula_count(const Region& region) {
  if (const auto rect = recognize_rectangle(region)) {
    const auto [rows, cols] = *rect;
    if ((rows * cols) % 2 != 0) return BigInt(0);
    return cols % 2 == 0 ? rectangle_count(rows, cols) : rectangle_count(cols, rows);
  }
  if (const auto hex = recognize_hexagon(region)) return hexagon_count(hex->r, hex->c, hex->m);
  return std::nullopt;
}

// The tiling named on the command line, or an extremal one.
std::optional<Tiling> chosen_tiling(const Region& region, const Options& o, std::ostream& err) {
  if (!o.tiling.empty()) return load_tiling(region, o.tiling);
  if (!o.use_min && !o.use_max) return std::nullopt;
  const ExtremalTiling t = o.use_max ? max_tiling(region) : min_tiling(region);
  if (!t) {
    err << "untileable " << to_string(t.stage) << '\n';
    throw Error("region has no tiling");
  }
  return *t.tiling;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Region region = load_region(o.region);
  if (region.simply_connected()) {
    const ExtremalTiling t = min_tiling(region);
    if (t) {
      out << "tileable\n";
      return kOk;
    }
    out << "untileable " << to_string(t.stage) << '\n';
    return kNo;
  }
  if (!region.balanced()) {
    out << "untileable " << to_string(UntileableStage::ColorImbalance) << '\n';
    return kNo;
  }
  if (find_tiling(region)) {
    out << "tileable\n";
    return kOk;
  }
  out << "untileable no-perfect-matching\n";
  return kNo;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const Region region = load_region(o.region);
  if (o.method == "det") {
    out << count_tilings(region) << '\n';
    return kOk;
  }
  if (o.method == "formula") {
    const auto n = formula_count(region);
    if (!n) {
      err << "no closed formula: the region is not a rectangle or a center-symmetric hexagon\n";
      return kInput;
    }
    out << *n << '\n';
    return kOk;
  }
  if (o.method == "enumerate") {
    out << count_by_enumeration(region) << '\n';
    return kOk;
  }
  const BigInt det = count_tilings(region);
  const auto formula = formula_count(region);
  const BigInt enumerated = count_by_enumeration(region);
  out << "determinant  " << det << '\n';
  out << "formula      ";
  if (formula) {
    out << *formula << '\n';
  } else {
    out << "n/a\n";
  }
  out << "enumeration  " << enumerated << '\n';
  if (det != enumerated || (formula && *formula != det)) {
    err << "counting methods disagree\n";
    return kDisagree;
  }
  return kOk;
}

int cmd_distance(const Options& o, std::ostream& out) {
  const Region region = load_region(o.region);
  const Tiling a = load_tiling(region, o.tiling);
  const Tiling b = load_tiling(region, o.tiling2);
  if (region.simply_connected()) {
    out << distance(a, b) << '\n';
    return kOk;
  }
  const auto d = bfs_distance(a, b, o.limit);
  if (!d) {
    out << "unreachable\n";
    return kNo;
  }
  out << *d << '\n';
  return kOk;
}

int cmd_components(const Options& o, std::ostream& out, std::ostream& err) {
  const Region region = load_region(o.region);
  const FlipGraph g = flip_graph(region, o.limit);
  const std::vector<Cut> cuts = cuts_basis(region);
  const auto sizes = g.component_sizes();

  std::vector<std::optional<FlowSignature>> signature(std::size_t(g.component_count));
  bool uniform = true;
  for (std::size_t i = 0; i < g.tilings.size(); ++i) {
    const FlowSignature s = flow_signature(g.tilings[i], cuts);
    auto& slot = signature[g.component[i]];
    if (!slot) {
      slot = s;
    } else if (*slot != s) {
      uniform = false;
    }
  }
  std::map<FlowSignature, int> seen;
  bool distinct = true;
  for (const auto& s : signature) distinct = seen.emplace(*s, 0).second && distinct;

  out << "tilings " << g.tilings.size() << '\n';
  out << "components " << g.component_count << '\n';
  for (int c = 0; c < g.component_count; ++c) {
    out << "component " << c << " size " << sizes[c] << " signature "
        << signature_text(*signature[c]) << '\n';
  }
  const bool bijective = uniform && distinct;
  if (region.lattice() == Lattice::Square) {
    if (!bijective) {
      err << "flow signatures do not match flip-graph components\n";
      return kDisagree;
    }
  } else {
    out << "signatures match components: " << (bijective ? "yes" : "no") << '\n';
  }
  return kOk;
}

RenderStyle style_of(const Options& o) {
  RenderStyle s;
  s.format = o.format == "svg" ? RenderStyle::Format::Svg : RenderStyle::Format::Ascii;
  s.scale = o.scale;
  s.show_heights = o.show_heights;
  s.show_colors = o.show_colors;
  return s;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  const Region region = load_region(o.region);
  const auto t = chosen_tiling(region, o, err);
  if (o.show_heights && !t) throw Error("--show-heights needs a tiling");
  out << (t ? render_tiling(*t, style_of(o)) : render_region(region, style_of(o)));
  return kOk;
}

int cmd_dump_heights(const Options& o, std::ostream& out, std::ostream& err) {
  const Region region = load_region(o.region);
  Options chosen = o;
  if (o.tiling.empty() && !o.use_max) chosen.use_min = true;
  const auto t = chosen_tiling(region, chosen, err);
  out << serialize_heights(heights_from_tiling(*t));
  return kOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const Region region = load_region(o.region);
  out << serialize_partition(tiling_to_partition(load_tiling(region, o.tiling)));
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const PlanePartition p = parse_partition(read_file(o.partition));
  int r = p.rows, c = p.cols, m = p.bound;
  if (!o.box.empty()) {
    r = o.box[0];
    c = o.box[1];
    m = o.box[2];
  }
  out << serialize_tiling(partition_to_tiling(p, r, c, m));
  return kOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact domino and lozenge tilings", "calisson"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Render format")
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  app.add_option("--scale", o.scale, "SVG pixels per unit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for random generation")->capture_default_str();
  app.add_option("--limit", o.limit, "Maximum number of tilings to store")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Decide whether a region is tileable");
  check->add_option("region", o.region, "Region file")->required();

  auto* count = app.add_subcommand("count", "Count tilings exactly");
  count->add_option("region", o.region, "Region file")->required();
  count->add_option("--method", o.method, "det, formula, enumerate or all")
      ->check(CLI::IsMember({"det", "formula", "enumerate", "all"}))
      ->capture_default_str();

  auto* dist = app.add_subcommand("distance", "Flip distance between two tilings");
  dist->add_option("region", o.region, "Region file")->required();
  dist->add_option("tiling1", o.tiling, "Tiling file")->required();
  dist->add_option("tiling2", o.tiling2, "Tiling file")->required();

  auto* comps = app.add_subcommand("components", "Flip-graph components and flow signatures");
  comps->add_option("region", o.region, "Region file")->required();

  auto* render = app.add_subcommand("render", "Draw a region or a tiling");
  render->add_option("region", o.region, "Region file")->required();
  render->add_option("tiling", o.tiling, "Tiling file");
  render->add_flag("--show-heights", o.show_heights, "Label vertices with heights");
  render->add_flag("--show-colors", o.show_colors, "Shade black cells");
  auto* rmin = render->add_flag("--min", o.use_min, "Draw the minimal tiling");
  render->add_flag("--max", o.use_max, "Draw the maximal tiling")->excludes(rmin);

  auto* dump = app.add_subcommand("dump-heights", "Print `x y h` for every vertex");
  dump->add_option("region", o.region, "Region file")->required();
  dump->add_option("tiling", o.tiling, "Tiling file (default: the minimal tiling)");
  dump->add_flag("--max", o.use_max, "Use the maximal tiling");

  auto* part = app.add_subcommand("partition", "Convert between hexagon tilings and plane partitions");
  part->require_subcommand(1);
  auto* encode = part->add_subcommand("encode", "Tiling of a hexagon to a partition array");
  encode->add_option("region", o.region, "Region file")->required();
  encode->add_option("tiling", o.tiling, "Tiling file")->required();
  auto* decode = part->add_subcommand("decode", "Partition array to a hexagon tiling");
  decode->add_option("partition", o.partition, "Partition file")->required();
  decode->add_option("--box", o.box, "Box sides r c m")->expected(3);

  auto* gen = app.add_subcommand("gen", "Generate region files");
  gen->require_subcommand(1);
  auto* rect = gen->add_subcommand("rect", "rows x cols rectangle");
  rect->add_option("sizes", o.sizes, "rows cols")->expected(2)->required();
  auto* hex = gen->add_subcommand("hex", "hexagon with sides r, c, m");
  hex->add_option("sizes", o.sizes, "r c m")->expected(3)->required();
  auto* tri = gen->add_subcommand("tri", "triangle of side n");
  tri->add_option("sizes", o.sizes, "n")->expected(1)->required();
  auto* rnd = gen->add_subcommand("random", "random connected region");
  rnd->add_option("cells", o.cells, "Number of cells")->required()->check(CLI::PositiveNumber);
  rnd->add_option("--lattice", o.lattice, "square or triangle")
      ->check(CLI::IsMember({"square", "triangle"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInput;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (count->parsed()) return cmd_count(o, out, err);
    if (dist->parsed()) return cmd_distance(o, out);
    if (comps->parsed()) return cmd_components(o, out, err);
    if (render->parsed()) return cmd_render(o, out, err);
    if (dump->parsed()) return cmd_dump_heights(o, out, err);
    if (encode->parsed()) return cmd_encode(o, out);
    if (decode->parsed()) return cmd_decode(o, out);
    if (rect->parsed()) out << serialize_region(make_rectangle(o.sizes[0], o.sizes[1]));
    if (hex->parsed()) out << serialize_region(make_hexagon(o.sizes[0], o.sizes[1], o.sizes[2]));
    if (tri->parsed()) out << serialize_region(make_triangle(o.sizes[0]));
    if (rnd->parsed()) {
      const Lattice lat = o.lattice == "triangle" ? Lattice::Triangle : Lattice::Square;
      out << serialize_region(make_random(lat, o.cells, o.seed));
    }
    return kOk;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << " (raise --limit)\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace calisson
