#include "asynctl/circuit.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "asynctl/logic.hpp"

namespace asynctl {

namespace {

struct Line {
    std::size_t number; // 1-based, in the original text
    std::string key;
    std::string value;
};

struct Section {
    std::string name;
    std::vector<Line> lines;
};

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep))
        out.push_back(strip(item));
    if (!s.empty() && s.back() == sep)
        out.push_back("");
    return out;
}

[[noreturn]] void fail(const std::string& section, std::size_t line,
                       const std::string& message) {
    throw ParseError(line, "[" + section + "] line " + std::to_string(line) + ": " +
                               message);
}

std::vector<Section> read_sections(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream is(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(is, raw)) {
        ++number;
        std::string line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        line = strip(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail("?", number, "unterminated section header");
            sections.push_back({line.substr(1, line.size() - 2), {}});
            continue;
        }
        if (sections.empty())
            fail("?", number, "content before the first section header");
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(sections.back().name, number, "expected `name = value`");
        sections.back().lines.push_back(
            {number, strip(line.substr(0, eq)), strip(line.substr(eq + 1))});
    }
    return sections;
}

Time parse_time(const std::string& section, std::size_t line, const std::string& text,
                const char* what) {
    try {
        return Time::parse(text);
    } catch (const ParseError&) {
        fail(section, line, std::string("bad ") + what + " '" + text + "'");
    }
}

Bit parse_bit(const std::string& section, std::size_t line, const std::string& text) {
    if (text == "0")
        return bit0;
    if (text == "1")
        return bit1;
    fail(section, line, "expected 0 or 1, got '" + text + "'");
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return s != "U" && s != "F" && s != "G" && s != "A" && s != "E" && s != "X";
}

} // namespace

CircuitFile parse_circuit(const std::string& text) {
    std::vector<Section> sections = read_sections(text);
    const Section* coords = nullptr;
    const Section* generator = nullptr;
    const Section* inputs = nullptr;
    const Section* options = nullptr;
    for (const Section& s : sections) {
        const Section** slot = s.name == "coords"      ? &coords
                               : s.name == "generator" ? &generator
                               : s.name == "inputs"    ? &inputs
                               : s.name == "options"   ? &options
                                                       : nullptr;
        if (!slot)
            fail(s.name, s.lines.empty() ? 0 : s.lines.front().number,
                 "unknown section [" + s.name + "]");
        if (*slot)
            fail(s.name, s.lines.empty() ? 0 : s.lines.front().number,
                 "duplicate section [" + s.name + "]");
        *slot = &s;
    }
    if (!coords || coords->lines.empty())
        throw ParseError(0, "[coords] line 0: at least one coordinate is required");
    if (!generator)
        throw ParseError(0, "[generator] line 0: section is required");
    if (!options)
        throw ParseError(0, "[options] line 0: section is required");

    // [coords]: name = kind delay init
    std::vector<std::string> state_names;
    std::vector<DelayKind> kinds;
    std::vector<Time> delays;
    std::vector<Bit> initial;
    for (const Line& l : coords->lines) {
        if (!valid_name(l.key))
            fail("coords", l.number, "bad coordinate name '" + l.key + "'");
        for (const std::string& seen : state_names)
            if (seen == l.key)
                fail("coords", l.number, "duplicate coordinate '" + l.key + "'");
        std::istringstream vs(l.value);
        std::string kind, delay, init, extra;
        vs >> kind >> delay >> init;
        if (vs >> extra)
            fail("coords", l.number, "trailing content '" + extra + "'");
        if (kind != "ideal" && kind != "inertial")
            fail("coords", l.number, "kind must be ideal or inertial, got '" + kind + "'");
        if (delay.empty() || init.empty())
            fail("coords", l.number, "expected `kind delay init`");
        Time tau = parse_time("coords", l.number, delay, "delay");
        if (!tau.is_positive())
            fail("coords", l.number, "delay must be positive");
        state_names.push_back(l.key);
        kinds.push_back(kind == "ideal" ? DelayKind::ideal : DelayKind::inertial);
        delays.push_back(tau);
        initial.push_back(parse_bit("coords", l.number, init));
    }

    // [inputs]: name = initial [: toggles]
    std::vector<std::string> input_names;
    InputWave wave;
    if (inputs) {
        for (const Line& l : inputs->lines) {
            if (!valid_name(l.key))
                fail("inputs", l.number, "bad input name '" + l.key + "'");
            for (const std::string& seen : state_names)
                if (seen == l.key)
                    fail("inputs", l.number, "input '" + l.key + "' clashes with a coordinate");
            for (const std::string& seen : input_names)
                if (seen == l.key)
                    fail("inputs", l.number, "duplicate input '" + l.key + "'");
            std::string head = l.value;
            std::string tail;
            if (std::size_t colon = l.value.find(':'); colon != std::string::npos) {
                head = strip(l.value.substr(0, colon));
                tail = strip(l.value.substr(colon + 1));
            }
            Bit init = parse_bit("inputs", l.number, head);
            std::vector<Time> toggles;
            if (!tail.empty())
                for (const std::string& item : split(tail, ','))
                    toggles.push_back(parse_time("inputs", l.number, item, "toggle"));
            try {
                wave.push_back(Signal::make(init, std::move(toggles)));
            } catch (const Error& e) {
                fail("inputs", l.number, e.what());
            }
            input_names.push_back(l.key);
        }
    }

    // [generator]: one Boolean expression per coordinate
    std::vector<std::string> all_names = state_names;
    all_names.insert(all_names.end(), input_names.begin(), input_names.end());
    std::map<std::string, const Line*> gen_lines;
    for (const Line& l : generator->lines) {
        if (gen_lines.count(l.key))
            fail("generator", l.number, "duplicate generator for '" + l.key + "'");
        bool known = false;
        for (const std::string& s : state_names)
            known = known || s == l.key;
        if (!known)
            fail("generator", l.number, "'" + l.key + "' is not a coordinate");
        gen_lines[l.key] = &l;
    }
    std::vector<BooleanFunction> functions;
    for (const std::string& name : state_names) {
        auto it = gen_lines.find(name);
        if (it == gen_lines.end())
            fail("generator", generator->lines.empty() ? 0 : generator->lines.back().number,
                 "missing generator for '" + name + "'");
        const Line& l = *it->second;
        try {
            functions.push_back(to_boolean_function(parse_formula(l.value), all_names));
        } catch (const Error& e) {
            fail("generator", l.number, e.what());
        }
    }

    // [options]
    std::optional<Time> horizon;
    std::optional<Time> step;
    for (const Line& l : options->lines) {
        if (l.key == "horizon") {
            horizon = parse_time("options", l.number, l.value, "horizon");
            if (horizon->is_negative())
                fail("options", l.number, "horizon must be nonnegative");
        } else if (l.key == "step") {
            step = parse_time("options", l.number, l.value, "step");
            if (!step->is_positive())
                fail("options", l.number, "step must be positive");
        } else {
            fail("options", l.number, "unknown option '" + l.key + "'");
        }
    }
    if (!horizon)
        fail("options", options->lines.empty() ? 0 : options->lines.back().number,
             "horizon is required");

    try {
        Automaton a(std::move(state_names), std::move(input_names), std::move(kinds),
                    std::move(functions), std::move(delays), std::move(initial));
        return CircuitFile{std::move(a), std::move(wave), *horizon, step};
    } catch (const Error& e) {
        fail("coords", 0, e.what());
    }
}

std::string serialize_circuit(const CircuitFile& file) {
    const Automaton& a = file.automaton;
    std::ostringstream os;
    os << "[coords]\n";
    for (std::size_t i = 0; i < a.state_count(); ++i) {
        os << a.state_names()[i] << " = "
           << (a.kinds()[i] == DelayKind::ideal ? "ideal" : "inertial") << ' '
           << a.delays()[i] << ' ' << a.initial()[i].as_int() << '\n';
    }
    os << "\n[generator]\n";
    for (std::size_t i = 0; i < a.state_count(); ++i)
        os << a.state_names()[i] << " = " << a.generator()[i].str() << '\n';
    if (!file.inputs.empty()) {
        os << "\n[inputs]\n";
        for (std::size_t j = 0; j < file.inputs.size(); ++j) {
            const Signal& s = file.inputs[j];
            os << a.input_names()[j] << " = " << s.initial().as_int();
            for (std::size_t k = 0; k < s.toggles().size(); ++k)
                os << (k == 0 ? " : " : ", ") << s.toggles()[k];
            os << '\n';
        }
    }
    os << "\n[options]\nhorizon = " << file.horizon << '\n';
    if (file.step)
        os << "step = " << *file.step << '\n';
    return os.str();
}

bool CircuitFile::operator==(const CircuitFile& o) const {
    return automaton == o.automaton && inputs == o.inputs && horizon == o.horizon &&
           step == o.step;
}

std::string trace_csv(const Trajectory& x) {
    std::ostringstream os;
    os << "time,signal,value\n";
    auto emit = [&](const std::string& name, const Signal& s) {
        os << "0," << name << ',' << s.initial().as_int() << '\n';
        Bit v = s.initial();
        for (const Time& t : s.toggles()) {
            v = ~v;
            os << t << ',' << name << ',' << v.as_int() << '\n';
        }
    };
    for (std::size_t i = 0; i < x.states.size(); ++i)
        emit(x.state_names[i], x.states[i]);
    for (std::size_t j = 0; j < x.inputs.size(); ++j)
        emit(x.input_names[j], x.inputs[j]);
    return os.str();
}

std::vector<std::pair<std::string, Signal>> parse_trace_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t number = 0;
    if (!std::getline(is, line) || strip(line) != "time,signal,value")
        throw ParseError(1, "trace must start with `time,signal,value`");
    ++number;

    // name -> (initial, toggles, current value), in first-seen order
    std::vector<std::pair<std::string, Signal>> out;
    struct Partial {
        Bit initial;
        std::vector<Time> toggles;
        Bit current;
        bool started = false;
    };
    std::vector<std::string> order;
    std::map<std::string, Partial> partials;

    while (std::getline(is, line)) {
        ++number;
        line = strip(line);
        if (line.empty())
            continue;
        std::vector<std::string> cols = split(line, ',');
        if (cols.size() != 3)
            throw ParseError(number, "expected `time,signal,value`");
        Time t = Time::parse(cols[0]);
        const std::string& name = cols[1];
        Bit v = cols[2] == "1" ? bit1 : bit0;
        if (cols[2] != "0" && cols[2] != "1")
            throw ParseError(number, "value must be 0 or 1");
        auto [it, fresh] = partials.try_emplace(name);
        Partial& p = it->second;
        if (fresh)
            order.push_back(name);
        if (!p.started) {
            if (!t.is_zero())
                throw ParseError(number, "signal '" + name + "' must start at time 0");
            p.initial = p.current = v;
            p.started = true;
        } else {
            if (v != ~p.current)
                throw ParseError(number, "row does not flip signal '" + name + "'");
            p.toggles.push_back(t);
            p.current = v;
        }
    }
    for (const std::string& name : order)
        out.emplace_back(name, Signal::make(partials[name].initial,
                                            std::move(partials[name].toggles)));
    return out;
}

} // namespace asynctl
