#include "harborlink/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace harborlink::io {

namespace {

std::string trim(std::string_view s) {
    const char* ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return std::string(s.substr(begin, end - begin + 1));
}

double parse_number(const std::string& value, int line) {
    try {
        std::size_t consumed = 0;
        const double v = std::stod(value, &consumed);
        if (consumed != value.size()) throw ConfigError("trailing characters after number", line);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("expected a number, got '" + value + "'", line);
    }
}

struct Parser {
    scenario::ScenarioConfig config;
    bool slots_given = false;
    bool ships_given = false;

    using Setter = std::function<void(const std::string&, int)>;
    std::map<std::string, Setter, std::less<>> setters;

    void number_key(const std::string& key, double* field, bool require_positive = false) {
        setters[key] = [field, require_positive, key](const std::string& value, int line) {
            const double v = parse_number(value, line);
            if (require_positive && !(v > 0.0)) {
                throw ConfigError(key + " must be > 0", line);
            }
            *field = v;
        };
    }

    Parser() {
        setters["scenario"] = [this](const std::string& v, int line) {
            if (v == "single") {
                config.kind = scenario::ScenarioKind::Single;
            } else if (v == "multi") {
                config.kind = scenario::ScenarioKind::Multi;
            } else {
                throw ConfigError("unknown scenario '" + v + "' (valid: single, multi)", line);
            }
        };
        setters["arch"] = [this](const std::string& v, int line) {
            const auto arch = positioning::parse_architecture(v);
            if (!arch) {
                throw ConfigError("unknown arch '" + v + "' (valid: nr, fpr, cfmr, lsmr)", line);
            }
            config.architecture = *arch;
        };
        setters["seed"] = [this](const std::string& v, int line) {
            std::uint64_t seed = 0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
            if (ec != std::errc() || ptr != v.data() + v.size()) {
                throw ConfigError("seed must be a non-negative integer", line);
            }
            config.seed = seed;
        };
        setters["slots.count"] = [this](const std::string& v, int line) {
            const double n = parse_number(v, line);
            if (n < 0.0 || n != static_cast<double>(static_cast<int>(n))) {
                throw ConfigError("slots.count must be a non-negative integer", line);
            }
            config.n_slots = static_cast<int>(n);
            slots_given = true;
        };
        number_key("slots.duration_s", &config.slot_duration_s, true);

        number_key("area.width_m", &config.area_width_m, true);
        number_key("area.length_m", &config.area_length_m, true);
        number_key("bs.x_m", &config.bs.x);
        number_key("bs.y_m", &config.bs.y);
        number_key("bs.height_m", &config.bs.z, true);

        number_key("blocker.center_x_m", &config.blocking_ship.center.x);
        number_key("blocker.center_y_m", &config.blocking_ship.center.y);
        number_key("blocker.width_m", &config.blocking_ship.width, true);
        number_key("blocker.length_m", &config.blocking_ship.length, true);
        number_key("blocker.height_m", &config.blocking_ship.height, true);
        number_key("blocker.yaw_rad", &config.blocking_ship.yaw);

        setters["ships.count"] = [this](const std::string& v, int line) {
            const double n = parse_number(v, line);
            if (n < 1.0 || n != static_cast<double>(static_cast<int>(n))) {
                throw ConfigError("ships.count must be a positive integer", line);
            }
            config.n_victims = static_cast<int>(n);
            ships_given = true;
        };
        number_key("ships.speed_mps", &config.ship_speed_mps);
        number_key("ships.width_m", &config.victim_width_m, true);
        number_key("ships.length_m", &config.victim_length_m, true);
        number_key("ships.hull_height_m", &config.victim_hull_height_m, true);
        number_key("ships.antenna_height_m", &config.victim_antenna_height_m);
        number_key("ships.start_x_m", &config.single_start_x_m);
        number_key("ships.start_y_m", &config.single_start_y_m);
        number_key("ships.heading_x", &config.single_heading_x);
        number_key("ships.heading_y", &config.single_heading_y);

        number_key("uav.ls_height_m", &config.ls_height_m, true);
        number_key("uav.max_altitude_m", &config.uav_max_altitude_m, true);

        auto& ch = config.channel;
        number_key("channel.carrier_frequency_hz", &ch.carrier_frequency_hz, true);
        number_key("channel.bandwidth_hz", &ch.bandwidth_hz, true);
        number_key("channel.noise_figure_db", &ch.noise_figure_db);
        number_key("channel.extra_loss_los_db", &ch.extra_loss_los_db);
        number_key("channel.extra_loss_nlos_db", &ch.extra_loss_nlos_db);
        number_key("channel.bs_tx_power_dbm", &ch.bs_tx_power_dbm);
        number_key("channel.relay_tx_power_dbm", &ch.relay_tx_power_dbm);
        number_key("channel.rx_sensitivity_dbm", &ch.rx_sensitivity_dbm);
        number_key("channel.bs_antenna_gain_dbi", &ch.bs_antenna_gain_dbi);
        number_key("channel.relay_antenna_gain_dbi", &ch.relay_antenna_gain_dbi);
        number_key("channel.ship_antenna_gain_dbi", &ch.ship_antenna_gain_dbi);
        number_key("channel.min_distance_m", &ch.min_distance_m, true);

        auto& en = config.energy;
        number_key("energy.rotor_count", &en.rotor_count, true);
        number_key("energy.thrust_n", &en.thrust_n, true);
        number_key("energy.frame_weight_kg", &en.frame_weight_kg, true);
        number_key("energy.payload_weight_kg", &en.payload_weight_kg, true);
        number_key("energy.gravity", &en.gravity, true);
        number_key("energy.rotor_radius_m", &en.rotor_radius_m, true);
        number_key("energy.air_density", &en.air_density, true);
        number_key("energy.relay_tx_power_w", &en.relay_tx_power_w, true);
        number_key("energy.circuit_power_w", &en.circuit_power_w, true);
        number_key("energy.drag_coefficient", &en.drag_coefficient, true);
        number_key("energy.reference_area_m2", &en.reference_area_m2, true);
        number_key("energy.rotor_chord_m", &en.rotor_chord_m, true);
        number_key("energy.angular_velocity_rad_s", &en.angular_velocity_rad_s, true);
        number_key("energy.ascend_speed_mps", &en.ascend_speed_mps, true);
        number_key("energy.descend_speed_mps", &en.descend_speed_mps, true);
        number_key("energy.horizontal_speed_lsmr_mps", &en.horizontal_speed_lsmr_mps, true);
        number_key("energy.horizontal_speed_cfmr_mps", &en.horizontal_speed_cfmr_mps, true);
    }
};

} // namespace

scenario::ScenarioConfig parse_config_text(const std::string& text) {
    Parser parser;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value', got '" + trim(raw) + "'", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key before '='", line_no);
        if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no);
        const auto it = parser.setters.find(key);
        if (it == parser.setters.end()) {
            throw ConfigError("unknown key '" + key + "'", line_no);
        }
        it->second(value, line_no);
    }

    // Table defaults that depend on the scenario kind.
    if (parser.config.kind == scenario::ScenarioKind::Single) {
        if (!parser.ships_given) parser.config.n_victims = 1;
        if (!parser.slots_given) parser.config.n_slots = 10;
    } else {
        if (!parser.ships_given) parser.config.n_victims = 20;
        if (!parser.slots_given) parser.config.n_slots = 20;
    }

    try {
        parser.config.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return parser.config;
}

scenario::ScenarioConfig parse_config(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot open config file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    try {
        return parse_config_text(buffer.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

} // namespace harborlink::io
