#pragma once

// Terminal controllers for `surround play`: they print the legal options and
// re-prompt until the input names a legal move.

#include <iostream>
#include <sstream>
#include <string>

#include "surround/match.hpp"

namespace surround::cli {

inline std::string position_label(const GameSpec& spec, Position p) {
  if (!on_edges(spec.variant)) return std::to_string(p);
  auto e = spec.g().edge(p);
  return std::to_string(p) + "(" + std::to_string(e.u) + "-" + std::to_string(e.v) + ")";
}

inline std::string positions_label(const GameSpec& spec, std::span<const Position> ps) {
  std::string s;
  for (auto p : ps) s += (s.empty() ? "" : " ") + position_label(spec, p);
  return s;
}

class Prompt {
 public:
  Prompt(std::istream& in, std::ostream& out) : in_(&in), out_(&out) {}

  // Reads a line of unsigned integers; throws when input ends.
  std::vector<std::uint32_t> numbers(const std::string& question) {
    while (true) {
      *out_ << question << "> " << std::flush;
      std::string line;
      if (!std::getline(*in_, line)) throw StrategyViolation("input closed");
      std::istringstream ls(line);
      std::vector<std::uint32_t> out;
      std::string tok;
      bool ok = true;
      while (ls >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
          ok = false;
          break;
        }
        out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      }
      if (ok && !out.empty()) return out;
      *out_ << "  not a list of numbers, try again\n";
    }
  }
  std::ostream& out() { return *out_; }

 private:
  std::istream* in_;
  std::ostream* out_;
};

class HumanCops : public CopController {
 public:
  explicit HumanCops(Prompt& p) : p_(&p) {}

  std::vector<Position> place(const GameSpec& spec) override {
    p_->out() << "Place " << spec.k << " cop(s) on " << (on_edges(spec.variant) ? "edges" : "vertices") << " 0.."
              << spec.domain_size() - 1 << "\n";
    while (true) {
      auto v = p_->numbers("cops");
      bool ok = v.size() == spec.k;
      for (auto x : v) ok = ok && x < spec.domain_size();
      if (ok) return v;
      p_->out() << "  need exactly " << spec.k << " positions in range\n";
    }
  }

  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    p_->out() << "Robber on " << c.robber << ". Cops on " << positions_label(spec, c.cops) << ".\n";
    for (std::size_t i = 0; i < c.cops.size(); ++i) {
      auto opts = cop_moves_from(spec, c.cops[i]);
      p_->out() << "  cop on " << position_label(spec, c.cops[i]) << " may go to " << positions_label(spec, opts) << "\n";
    }
    while (true) {
      auto v = p_->numbers("new cop positions");
      if (v.size() == spec.k && std::all_of(v.begin(), v.end(), [&](auto x) { return x < spec.domain_size(); }) &&
          joint_move_legal(spec, c.cops, sorted_copy(v)))
        return v;
      p_->out() << "  not a legal joint move\n";
    }
  }

  std::unique_ptr<CopController> clone() const override { return std::make_unique<HumanCops>(*this); }
  std::string name() const override { return "human-cops"; }

 private:
  Prompt* p_;
};

class HumanRobber : public RobberController {
 public:
  explicit HumanRobber(Prompt& p) : p_(&p) {}

  std::optional<Vertex> place(const GameSpec& spec, std::span<const Position> cops) override {
    auto legal = robber_placements(spec, cops);
    if (legal.empty()) return std::nullopt;
    p_->out() << "Cops on " << positions_label(spec, cops) << ".\n";
    return choose(legal, "start vertex");
  }

  Vertex move(const GameSpec& spec, const Configuration& c) override {
    p_->out() << "Cops on " << positions_label(spec, c.cops) << ". You are on " << c.robber << ".\n";
    return choose(robber_moves(spec, c.cops, c.robber), "move to");
  }

  std::unique_ptr<RobberController> clone() const override { return std::make_unique<HumanRobber>(*this); }
  std::string name() const override { return "human-robber"; }

 private:
  Vertex choose(const std::vector<Vertex>& legal, const std::string& what) {
    std::string menu;
    for (auto v : legal) menu += " " + std::to_string(v);
    p_->out() << "  legal:" << menu << "\n";
    while (true) {
      auto v = p_->numbers(what);
      if (v.size() == 1 && std::find(legal.begin(), legal.end(), v[0]) != legal.end()) return v[0];
      p_->out() << "  pick one of:" << menu << "\n";
    }
  }

  Prompt* p_;
};

}  // namespace surround::cli
