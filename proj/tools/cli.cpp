#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "abacus/abacus.hpp"

namespace abacus::cli {

namespace {

using json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(pos, end - pos);
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw usage_error(std::string("bad integer list for ") + what + ": '" + text + "'");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    auto p = parse_ints(text, "partition");
    check_partition(p);
    return p;
}

Multipartition parse_mp(const std::string& text) {
    Multipartition mp;
    std::size_t pos = 0;
    for (;;) {
        std::size_t end = text.find('|', pos);
        mp.push_back(parse_partition(text.substr(pos, end == std::string::npos ? std::string::npos : end - pos)));
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return mp;
}

json node_json(const Node& n) {
    return {{"row", n.row}, {"col", n.col}, {"comp", n.comp}};
}

json nodes_json(const std::vector<Node>& v) {
    json a = json::array();
    for (const auto& n : v) a.push_back(node_json(n));
    return a;
}

json mp_json(const Multipartition& mp) {
    json a = json::array();
    for (const auto& p : mp) a.push_back(p);
    return a;
}

json block_json(const BlockId& b) {
    return {{"core_multicharge", b.core_multicharge}, {"weight", b.weight}, {"e", b.e}, {"l", b.l}, {"m", b.m}};
}

json opt_mp_json(const std::optional<Multipartition>& mp) {
    return mp ? mp_json(*mp) : json(nullptr);
}

// Text rendering mirrors the JSON value: arrays as tuples, nodes as (row,col,comp).
std::string text_of(const json& v) {
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "(";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + text_of(v[k]);
        return s + ")";
    }
    if (v.is_object()) {
        if (v.contains("row") && v.contains("col") && v.contains("comp") && v.size() == 3)
            return "(" + v["row"].dump() + "," + v["col"].dump() + "," + v["comp"].dump() + ")";
        std::string s;
        for (auto it = v.begin(); it != v.end(); ++it)
            s += (s.empty() ? "" : " ") + it.key() + "=" + text_of(it.value());
        return s;
    }
    return v.dump();
}

void emit(std::ostream& out, const json& v, bool as_json) {
    if (as_json) {
        out << v.dump() << '\n';
        return;
    }
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) out << it.key() << ": " << text_of(it.value()) << '\n';
    } else if (v.is_array()) {
        for (const auto& x : v) out << text_of(x) << '\n';
    } else {
        out << text_of(v) << '\n';
    }
}

struct Flags {
    int e = 0, m = 0, l = 0, i = 0, n = 0, rows = 0, r = 0, w = 0, w2 = 0, bound = 0;
    std::string partition, mp, charges, word, window, betas, x, y, start, target, s_e, s_e2;
    bool json = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cores, quotients, blocks and affine actions for charged multipartitions", "abacus"};
    app.require_subcommand(1);
    Flags f;
    std::map<CLI::App*, std::function<json()>> handlers;
    CLI::App* render_cmd = nullptr;

    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_flag("--json", f.json, "JSON output");
        return s;
    };
    auto opt_e = [&](CLI::App* s) { s->add_option("--e", f.e, "modulus e >= 2")->required(); };
    auto opt_m = [&](CLI::App* s) { s->add_option("--m", f.m, "charge (default 0)"); };
    auto opt_l = [&](CLI::App* s) { s->add_option("--l", f.l, "level l >= 1")->required(); };
    auto opt_i = [&](CLI::App* s) { s->add_option("--i", f.i, "residue")->required(); };
    auto opt_p = [&](CLI::App* s) { s->add_option("--partition", f.partition, "parts, e.g. 6,3,2,1,1")->required(); };
    auto opt_mp = [&](CLI::App* s) {
        s->add_option("--mp", f.mp, "components joined by '|', e.g. 3,1|2,1")->required();
        s->add_option("--charges", f.charges, "multicharge, e.g. 0,0")->required();
    };
    auto opt_word = [&](CLI::App* s) { s->add_option("--word", f.word, "group word, e.g. \"s1 t s0\"")->required(); };
    auto opt_block = [&](CLI::App* s) {
        s->add_option("--s-e", f.s_e, "core multicharge")->required();
        s->add_option("--w", f.w, "weight")->required();
        opt_l(s);
    };
    auto charged = [&] {
        auto mp = parse_mp(f.mp);
        auto s = parse_ints(f.charges, "charges");
        check_multipartition(mp, s);
        return Charged{mp, s};
    };
    auto block_from_flags = [&](const std::string& s_e, int w) {
        return make_block_id(parse_ints(s_e, "core multicharge"), w, f.l);
    };

    auto* c = sub("core", "e-core partition, core multicharge and weight");
    opt_p(c), opt_e(c), opt_m(c);
    handlers[c] = [&] {
        auto d = core_data(parse_partition(f.partition), f.m, f.e);
        return json{{"core_multicharge", d.core_multicharge}, {"core_partition", d.core_partition}, {"weight", d.weight}};
    };

    c = sub("quotient", "e-quotient and core multicharge");
    opt_p(c), opt_e(c), opt_m(c);
    handlers[c] = [&] {
        auto q = tau_e(parse_partition(f.partition), f.m, f.e);
        return json{{"quotient", mp_json(q.mp)}, {"core_multicharge", q.charges}};
    };

    c = sub("uglov", "level l decomposition of a charged partition");
    opt_p(c), opt_e(c), opt_m(c), opt_l(c);
    handlers[c] = [&] {
        auto q = tau_l(parse_partition(f.partition), f.m, f.e, f.l);
        return json{{"mp", mp_json(q.mp)}, {"charges", q.charges}};
    };

    c = sub("from-quotient", "partition with a given e-quotient and core multicharge");
    opt_mp(c);
    handlers[c] = [&] {
        auto x = charged();
        auto p = tau_e_inverse(x.mp, x.charges);
        return json{{"partition", p.partition}, {"m", p.m}};
    };

    c = sub("from-uglov", "partition with a given level l decomposition");
    opt_mp(c), opt_e(c);
    handlers[c] = [&] {
        auto x = charged();
        auto p = tau_l_inverse(x.mp, x.charges, f.e);
        return json{{"partition", p.partition}, {"m", p.m}};
    };

    c = sub("transpose", "level-rank transpose of a charged multipartition");
    opt_mp(c), opt_e(c);
    handlers[c] = [&] {
        auto x = charged();
        auto t = level_rank_transpose(x.mp, x.charges, f.e);
        return json{{"mp_e", mp_json(t.mp)}, {"s_e", t.charges}};
    };

    c = sub("gencore", "generalized e-core");
    opt_mp(c), opt_e(c);
    handlers[c] = [&] {
        auto x = charged();
        auto g = generalized_core(x.mp, x.charges, f.e);
        return json{{"core_mp", mp_json(g.core_mp)}, {"core_charges", g.core_charges}, {"weight", g.weight}};
    };

    c = sub("weight", "weight of a charged multipartition");
    opt_mp(c), opt_e(c);
    handlers[c] = [&] {
        auto x = charged();
        return json{{"weight", weight(x.mp, x.charges, f.e)}};
    };

    c = sub("iscore", "core test by nested symbols and by nodes");
    opt_mp(c), opt_e(c);
    handlers[c] = [&] {
        auto x = charged();
        return json{{"is_core", is_core(x.mp, x.charges, f.e)}, {"node_test", is_core_by_nodes(x.mp, x.charges, f.e)}};
    };

    c = sub("nodes", "addable and removable i-nodes");
    opt_mp(c), opt_e(c), opt_i(c);
    handlers[c] = [&] {
        auto x = charged();
        auto b = boundary_nodes(x.mp, x.charges, f.e, f.i);
        return json{{"addable", nodes_json(b.addable)}, {"removable", nodes_json(b.removable)}};
    };

    c = sub("counts", "number of nodes of each residue");
    opt_mp(c), opt_e(c);
    handlers[c] = [&] {
        auto x = charged();
        return json{{"counts", count_nodes_by_residue(x.mp, x.charges, f.e)}};
    };

    c = sub("beta", "top beta numbers of a charged partition");
    opt_p(c), opt_m(c);
    c->add_option("--rows", f.rows, "number of beta numbers")->required();
    handlers[c] = [&] { return json{{"betas", beta_set(parse_partition(f.partition), f.m, f.rows)}}; };

    c = sub("symbol", "partition of a window of beta numbers");
    c->add_option("--betas", f.betas, "increasing beta numbers")->required();
    opt_m(c);
    handlers[c] = [&] { return json{{"partition", partition_of_symbol(parse_ints(f.betas, "betas"), f.m)}}; };

    c = sub("shift", "shift a symbol by r");
    opt_p(c), opt_m(c);
    c->add_option("--r", f.r, "shift")->required();
    handlers[c] = [&] {
        auto s = shift_symbol(Symbol{parse_partition(f.partition), f.m}, f.r);
        return json{{"partition", s.partition}, {"charge", s.charge}};
    };

    c = render_cmd = sub("render", "draw the abacus of a charged multipartition");
    opt_mp(c);
    c->add_option("--window", f.window, "positions lo:hi");
    handlers[c] = [&] {
        auto x = charged();
        int lo = 0, hi = 0;
        if (!f.window.empty()) {
            auto colon = f.window.find(':');
            if (colon == std::string::npos) throw usage_error("window must be lo:hi");
            lo = parse_ints(f.window.substr(0, colon), "window").at(0);
            hi = parse_ints(f.window.substr(colon + 1), "window").at(0);
        } else {
            lo = x.charges[0] - length(x.mp[0]);
            hi = x.charges[0] + (x.mp[0].empty() ? 0 : x.mp[0][0]) - 1;
            for (std::size_t k = 1; k < x.mp.size(); ++k) {
                lo = std::min(lo, x.charges[k] - length(x.mp[k]));
                hi = std::max(hi, x.charges[k] + (x.mp[k].empty() ? 0 : x.mp[k][0]) - 1);
            }
            lo -= 2, hi += 2;
        }
        auto text = render_abacus(make_multisymbol(x.mp, x.charges), lo, hi);
        json lines = json::array();
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        return json{{"window", {lo, hi}}, {"lines", lines}};
    };

    c = sub("act-e", "left action of a word on Z^e");
    opt_word(c), opt_l(c);
    c->add_option("--charges", f.charges, "e-tuple")->required();
    handlers[c] = [&] {
        return json{{"charges", act_charge_e(parse_word(f.word), parse_ints(f.charges, "charges"), f.l)}};
    };

    c = sub("act-l", "right action of a word on Z^l");
    opt_word(c), opt_e(c);
    c->add_option("--charges", f.charges, "l-tuple")->required();
    handlers[c] = [&] {
        return json{{"charges", act_charge_l(parse_ints(f.charges, "charges"), parse_word(f.word), f.e)}};
    };

    c = sub("pair", "pair two bead sets on a common window");
    c->add_option("--x", f.x, "first bead set")->required();
    c->add_option("--y", f.y, "second bead set")->required();
    handlers[c] = [&] {
        auto [a, b] = pair_symbols(parse_ints(f.x, "x"), parse_ints(f.y, "y"));
        return json{{"x", a}, {"y", b}};
    };

    c = sub("psi", "crystal isomorphism along a word");
    opt_mp(c), opt_word(c), opt_e(c);
    handlers[c] = [&] {
        auto x = charged();
        auto r = psi(x.mp, x.charges, parse_word(f.word), f.e);
        return json{{"mp", mp_json(r.mp)}, {"charges", r.charges}};
    };

    c = sub("sigma", "toggle every addable and removable i-node");
    opt_mp(c), opt_e(c), opt_i(c);
    handlers[c] = [&] {
        auto x = charged();
        return json{{"mp", mp_json(sigma_ordinary(f.i, x.mp, x.charges, f.e))}};
    };

    c = sub("signature", "i-signature and good nodes");
    opt_mp(c), opt_e(c), opt_i(c);
    handlers[c] = [&] {
        auto x = charged();
        auto s = i_signature(x.mp, x.charges, f.e, f.i);
        return json{{"word", s.word},
                    {"nodes", nodes_json(s.nodes)},
                    {"reduced", s.reduced},
                    {"good_addable", s.good_addable ? node_json(*s.good_addable) : json(nullptr)},
                    {"good_removable", s.good_removable ? node_json(*s.good_removable) : json(nullptr)}};
    };

    c = sub("etilde", "add the good addable i-node");
    opt_mp(c), opt_e(c), opt_i(c);
    handlers[c] = [&] {
        auto x = charged();
        return json{{"mp", opt_mp_json(e_tilde(f.i, x.mp, x.charges, f.e))}};
    };

    c = sub("ftilde", "remove the good removable i-node");
    opt_mp(c), opt_e(c), opt_i(c);
    handlers[c] = [&] {
        auto x = charged();
        return json{{"mp", opt_mp_json(f_tilde(f.i, x.mp, x.charges, f.e))}};
    };

    c = sub("star", "crystal action of sigma_i");
    opt_mp(c), opt_e(c), opt_i(c);
    handlers[c] = [&] {
        auto x = charged();
        return json{{"mp", mp_json(sigma_star(f.i, x.mp, x.charges, f.e))}};
    };

    c = sub("duality-check", "compare the crystal action with its level-rank transport");
    opt_mp(c), opt_e(c), opt_i(c);
    handlers[c] = [&] {
        auto x = charged();
        auto a = sigma_star(f.i, x.mp, x.charges, f.e);
        auto b = duality_transport(f.i, x.mp, x.charges, f.e);
        return json{{"star", mp_json(a)}, {"transport", mp_json(b)}, {"equal", a == b}};
    };

    c = sub("block", "block label of a charged multipartition");
    opt_mp(c), opt_e(c);
    handlers[c] = [&] {
        auto x = charged();
        return block_json(block_id(x.mp, x.charges, f.e));
    };

    c = sub("blocks", "all blocks of multipartitions of n");
    c->add_option("--n", f.n, "size")->required();
    c->add_option("--charges", f.charges, "multicharge")->required();
    opt_e(c);
    handlers[c] = [&] {
        json a = json::array();
        for (const auto& b : blocks_of(f.n, parse_ints(f.charges, "charges"), f.e)) {
            json members = json::array();
            for (const auto& mp : b.members) members.push_back(mp_json(mp));
            a.push_back({{"block", block_json(b.id)}, {"members", members}});
        }
        return a;
    };

    c = sub("uglov-set", "Uglov multipartitions of n");
    c->add_option("--n", f.n, "size")->required();
    c->add_option("--charges", f.charges, "multicharge")->required();
    opt_e(c);
    handlers[c] = [&] {
        json a = json::array();
        for (const auto& mp : uglov_set(parse_ints(f.charges, "charges"), f.e, f.n)) a.push_back(mp_json(mp));
        return a;
    };

    c = sub("scopes", "whether a block has no addable i-nodes");
    opt_block(c), opt_i(c);
    handlers[c] = [&] {
        auto b = block_from_flags(f.s_e, f.w);
        return json{{"scopes", is_scopes(b, f.i)}, {"brute", is_scopes_brute(b, f.i)}};
    };

    c = sub("block-act", "act on a block label by a word");
    opt_block(c), opt_word(c);
    handlers[c] = [&] { return block_json(block_action(parse_word(f.word), block_from_flags(f.s_e, f.w))); };

    c = sub("orbit-eq", "whether two blocks lie in the same orbit");
    opt_block(c);
    c->add_option("--s-e2", f.s_e2, "second core multicharge")->required();
    c->add_option("--w2", f.w2, "second weight")->required();
    handlers[c] = [&] {
        return json{{"equivalent", orbit_equivalent(block_from_flags(f.s_e, f.w), block_from_flags(f.s_e2, f.w2))}};
    };

    c = sub("realize", "multipartition at start whose core has multicharge target");
    c->add_option("--start", f.start, "starting multicharge")->required();
    c->add_option("--target", f.target, "core multicharge to reach")->required();
    opt_e(c);
    handlers[c] = [&] {
        auto s = parse_ints(f.start, "start"), t = parse_ints(f.target, "target");
        auto mp = realize_multicharge(s, t, f.e);
        return json{{"mp", mp_json(mp)}, {"charges", s}, {"core_charges", t}, {"weight", generalized_core_unchecked(mp, s, f.e).weight}};
    };

    c = sub("reachable", "core multicharges reachable from start");
    c->add_option("--start", f.start, "multicharge")->required();
    c->add_option("--bound", f.bound, "largest size searched")->required();
    opt_e(c);
    handlers[c] = [&] {
        return json{{"charges", reachable_multicharges(parse_ints(f.start, "start"), f.e, f.bound)}};
    };

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    try {
        for (auto& [cmd, handler] : handlers) {
            if (!cmd->parsed()) continue;
            auto v = handler();
            if (cmd == render_cmd && !f.json) {
                for (const auto& line : v["lines"]) out << line.get<std::string>() << '\n';
            } else {
                emit(out, v, f.json);
            }
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace abacus::cli
