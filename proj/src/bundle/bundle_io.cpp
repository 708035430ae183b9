#include "tbundle/bundle/bundle_io.hpp"

#include "tbundle/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tbundle {

namespace {

// Minimal document tree. Integers are kept exact whatever their size; other
// scalar kinds only remember what they were, for error messages.
struct Node;
using NodeList = std::vector<Node>;
using Members = std::vector<std::pair<std::string, Node>>;
struct OtherScalar {
  std::string kind;
};

struct Node {
  std::variant<BigInt, NodeList, Members, OtherScalar> value;
};

std::string kind_of(const Node& n) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) return "integer";
        else if constexpr (std::is_same_v<T, NodeList>) return "array";
        else if constexpr (std::is_same_v<T, Members>) return "object";
        else return v.kind;
      },
      n.value);
}

bool is_integer_lexeme(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
public:
  bool null() override { return put(Node{OtherScalar{"null"}}); }
  bool boolean(bool) override { return put(Node{OtherScalar{"boolean"}}); }
  bool number_integer(number_integer_t v) override {
    return put(Node{from_int64(static_cast<std::int64_t>(v))});
  }
  bool number_unsigned(number_unsigned_t v) override {
    return put(Node{BigInt(std::to_string(v))});
  }
  bool number_float(number_float_t, const string_t& lexeme) override {
    // Integers too large for 64 bits arrive here with their original text.
    if (is_integer_lexeme(lexeme)) return put(Node{BigInt(lexeme)});
    return put(Node{OtherScalar{"non-integer number " + lexeme}});
  }
  bool string(string_t&) override { return put(Node{OtherScalar{"string"}}); }
  bool binary(binary_t&) override { return put(Node{OtherScalar{"binary"}}); }

  bool start_object(std::size_t) override {
    stack_.push_back(Frame{Node{Members{}}, {}});
    return true;
  }
  bool key(string_t& k) override {
    stack_.back().pending_key = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override {
    stack_.push_back(Frame{Node{NodeList{}}, {}});
    return true;
  }
  bool end_array() override { return close(); }

  bool parse_error(std::size_t pos, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    throw ParseError("bundle document, byte " + std::to_string(pos) + ": " + ex.what());
  }

  Node take_root() { return std::move(*root_); }

private:
  struct Frame {
    Node node;
    std::string pending_key;
  };

  bool put(Node n) {
    if (stack_.empty()) {
      root_ = std::make_unique<Node>(std::move(n));
      return true;
    }
    Frame& top = stack_.back();
    if (auto* list = std::get_if<NodeList>(&top.node.value)) {
      list->push_back(std::move(n));
    } else {
      auto& members = std::get<Members>(top.node.value);
      for (const auto& [k, v] : members)
        if (k == top.pending_key) throw ParseError("bundle document: duplicate key \"" + k + "\"");
      members.emplace_back(top.pending_key, std::move(n));
    }
    return true;
  }

  bool close() {
    Node done = std::move(stack_.back().node);
    stack_.pop_back();
    return put(std::move(done));
  }

  std::vector<Frame> stack_;
  std::unique_ptr<Node> root_;
};

const BigInt& as_integer(const Node& n, const std::string& field) {
  if (const auto* v = std::get_if<BigInt>(&n.value)) return *v;
  throw ValidationError(field, "expected an integer, found " + kind_of(n));
}

const NodeList& as_array(const Node& n, const std::string& field, std::size_t len) {
  const auto* v = std::get_if<NodeList>(&n.value);
  if (!v) throw ValidationError(field, "expected an array, found " + kind_of(n));
  if (len != 0 && v->size() != len)
    throw ValidationError(field, "expected " + std::to_string(len) + " entries, got " +
                                     std::to_string(v->size()));
  return *v;
}

SL2Z as_sl2z(const Node& n, const std::string& field) {
  const auto& rows = as_array(n, field, 2);
  const auto& r0 = as_array(rows[0], field + "[0]", 2);
  const auto& r1 = as_array(rows[1], field + "[1]", 2);
  try {
    return {as_integer(r0[0], field + "[0][0]"), as_integer(r0[1], field + "[0][1]"),
            as_integer(r1[0], field + "[1][0]"), as_integer(r1[1], field + "[1][1]")};
  } catch (const ValidationError& e) {
    if (e.field() != "matrix") throw;
    const std::string what = e.what();
    throw ValidationError(field, what.substr(what.find(": ") + 2));
  }
}

}  // namespace

TorusBundle parse_bundle(std::string_view text) {
  TreeBuilder builder;
  nlohmann::json::sax_parse(text.begin(), text.end(), &builder);
  const Node root = builder.take_root();

  const auto* members = std::get_if<Members>(&root.value);
  if (!members) throw ValidationError("document", "expected an object, found " + kind_of(root));

  const Node* genus = nullptr;
  const Node* monodromy = nullptr;
  const Node* euler = nullptr;
  for (const auto& [k, v] : *members) {
    if (k == "genus") genus = &v;
    else if (k == "monodromy") monodromy = &v;
    else if (k == "euler") euler = &v;
    else throw ValidationError(k, "unknown key");
  }
  if (!genus) throw ValidationError("genus", "missing");
  if (!monodromy) throw ValidationError("monodromy", "missing");
  if (!euler) throw ValidationError("euler", "missing");

  const BigInt& g_big = as_integer(*genus, "genus");
  if (g_big < 2) throw ValidationError("genus", "must be at least 2, got " + g_big.get_str());
  if (g_big > 100000) throw ValidationError("genus", "unreasonably large: " + g_big.get_str());
  const int g = static_cast<int>(g_big.get_si());

  const auto& mono_nodes = as_array(*monodromy, "monodromy", 0);
  if (mono_nodes.size() != 2 * static_cast<std::size_t>(g))
    throw ValidationError("monodromy", "expected " + std::to_string(2 * g) + " matrices, got " +
                                           std::to_string(mono_nodes.size()));
  std::vector<SL2Z> mono;
  mono.reserve(mono_nodes.size());
  for (std::size_t i = 0; i < mono_nodes.size(); ++i)
    mono.push_back(as_sl2z(mono_nodes[i], "monodromy[" + std::to_string(i) + "]"));

  const auto& e = as_array(*euler, "euler", 2);
  TorusBundle bundle(g, std::move(mono), Vec2{as_integer(e[0], "euler[0]"), as_integer(e[1], "euler[1]")});
  if (!bundle.satisfies_surface_relation())
    throw ValidationError("monodromy",
                          "product of commutators [A1,A2][A3,A4]... is not the identity");
  return bundle;
}

TorusBundle load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bundle file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bundle(buf.str());
}

std::string serialize_bundle(const TorusBundle& bundle) {
  std::string out = "{\"genus\":" + std::to_string(bundle.genus()) + ",\"monodromy\":[";
  bool first = true;
  for (const auto& a : bundle.monodromy()) {
    if (!first) out += ',';
    first = false;
    out += "[[" + a.a().get_str() + ',' + a.b().get_str() + "],[" + a.c().get_str() + ',' +
           a.d().get_str() + "]]";
  }
  out += "],\"euler\":[" + bundle.m().get_str() + ',' + bundle.n().get_str() + "]}";
  return out;
}

}  // namespace tbundle
