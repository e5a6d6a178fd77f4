#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "svmc/petri_net.hpp"

namespace svmc {
namespace {

namespace pt = boost::property_tree;

struct RawArc {
    std::string id, source, target;
    Count weight;
};

struct RawNet {
    std::map<std::string, Count> places;  // id -> initial tokens
    std::vector<std::string> transitions;
    std::vector<RawArc> arcs;
};

std::string attribute(const pt::ptree& node, const char* name, const char* element) {
    auto v = node.get_optional<std::string>(std::string("<xmlattr>.") + name);
    if (!v || v->empty()) throw PnmlError(std::string(element) + " without a " + name + " attribute");
    return *v;
}

Count natural(std::string text, const std::string& what) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw PnmlError("empty " + what);
    text = text.substr(first, last - first + 1);
    Count v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size())
        throw PnmlError("malformed " + what + " \"" + text + "\"");
    return v;
}

void collect(const pt::ptree& node, RawNet& net, std::map<std::string, char>& kinds) {
    for (const auto& [tag, child] : node) {
        if (tag == "place") {
            std::string id = attribute(child, "id", "place");
            if (!kinds.emplace(id, 'p').second) throw PnmlError("duplicate id \"" + id + "\"");
            Count tokens = 0;
            if (auto text = child.get_optional<std::string>("initialMarking.text"))
                tokens = natural(*text, "initial marking of " + id);
            net.places[id] = tokens;
        } else if (tag == "transition") {
            std::string id = attribute(child, "id", "transition");
            if (!kinds.emplace(id, 't').second) throw PnmlError("duplicate id \"" + id + "\"");
            net.transitions.push_back(id);
        } else if (tag == "arc") {
            RawArc arc{attribute(child, "id", "arc"), attribute(child, "source", "arc"),
                       attribute(child, "target", "arc"), 1};
            if (!kinds.emplace(arc.id, 'a').second) throw PnmlError("duplicate id \"" + arc.id + "\"");
            if (auto text = child.get_optional<std::string>("inscription.text"))
                arc.weight = natural(*text, "inscription of arc " + arc.id);
            net.arcs.push_back(std::move(arc));
        } else if (tag == "page" || tag == "net") {
            collect(child, net, kinds);
        }
    }
}

}  // namespace

PetriNet parse_pnml(std::istream& in) {
    pt::ptree doc;
    try {
        pt::read_xml(in, doc);
    } catch (const pt::xml_parser_error& e) {
        throw PnmlError(std::string("malformed PNML document: ") + e.what());
    }
    auto root = doc.get_child_optional("pnml");
    if (!root) throw PnmlError("missing <pnml> root element");
    RawNet raw;
    std::map<std::string, char> kinds;
    collect(*root, raw, kinds);
    if (raw.places.empty()) throw PnmlError("net has no places");

    std::vector<std::string> places;
    std::vector<Count> initial;
    for (const auto& [id, tokens] : raw.places) {
        places.push_back(id);
        initial.push_back(tokens);
    }
    std::vector<std::string> transitions = raw.transitions;
    std::sort(transitions.begin(), transitions.end());
    auto index_of = [](const std::vector<std::string>& ids, const std::string& id) {
        return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };

    const std::size_t np = places.size(), nt = transitions.size();
    std::vector<std::vector<Count>> win(nt, std::vector<Count>(np, 0)), wout(nt, std::vector<Count>(np, 0));
    for (const RawArc& arc : raw.arcs) {
        auto s = kinds.find(arc.source), d = kinds.find(arc.target);
        if (s == kinds.end() || s->second == 'a')
            throw PnmlError("arc " + arc.id + " has unknown source \"" + arc.source + "\"");
        if (d == kinds.end() || d->second == 'a')
            throw PnmlError("arc " + arc.id + " has unknown target \"" + arc.target + "\"");
        if (s->second == d->second) throw PnmlError("arc " + arc.id + " connects two nodes of the same kind");
        if (s->second == 'p')
            win[index_of(transitions, arc.target)][index_of(places, arc.source)] += arc.weight;
        else
            wout[index_of(transitions, arc.source)][index_of(places, arc.target)] += arc.weight;
    }
    return PetriNet(std::move(places), std::move(transitions), std::move(win), std::move(wout),
                    std::vector<Capacity>(np), Marking(std::move(initial)));
}

PetriNet parse_pnml(std::string_view document) {
    std::istringstream in{std::string(document)};
    return parse_pnml(in);
}

PetriNet load_pnml(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PnmlError("cannot open " + path);
    return parse_pnml(in);
}

}  // namespace svmc
