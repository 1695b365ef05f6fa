#include "sg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sg {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw std::invalid_argument(msg.str());
}

}  // namespace

SignedGraph read_signed_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<SignedEdge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;  // blank line
    if (head[0] == '#') continue;
    if (head == "sg") {
      if (n >= 0) parse_error(line_no, "repeated header");
      if (!(ss >> n) || n < 0) parse_error(line_no, "header must be 'sg <n>'");
      continue;
    }
    if (head == "e") {
      if (n < 0) parse_error(line_no, "edge before 'sg <n>' header");
      int u, v;
      std::string sign_token;
      if (!(ss >> u >> v >> sign_token)) {
        parse_error(line_no, "edge lines must be 'e <u> <v> <+|->'");
      }
      int sign;
      if (sign_token == "+") {
        sign = +1;
      } else if (sign_token == "-") {
        sign = -1;
      } else {
        parse_error(line_no, "edge sign must be '+' or '-'");
      }
      edges.push_back({u, v, sign});
      continue;
    }
    parse_error(line_no, "unrecognized record '" + head + "'");
  }
  if (n < 0) throw std::invalid_argument("missing 'sg <n>' header");
  try {
    return SignedGraph::build(n, edges);
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(std::string("invalid graph: ") + err.what());
  }
}

SignedGraph parse_signed_graph(const std::string& text) {
  std::istringstream in(text);
  return read_signed_graph(in);
}

SignedGraph load_signed_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_signed_graph(in);
}

std::string serialize_signed_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << "sg " << g.order() << "\n";
  for (const SignedEdge& e : g.edges()) {
    out << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? '+' : '-') << "\n";
  }
  return out.str();
}

void save_signed_graph(const SignedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << serialize_signed_graph(g);
}

}  // namespace sg
