#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "walkguide/util.hpp"

namespace walkguide {

/// Walking danger level. Letter codes: A=Low, B=Mid, C=High.
enum class TriggerState : int { Low = 0, Mid = 1, High = 2 };

char trigger_letter(TriggerState s);
const char* trigger_name(TriggerState s);
std::optional<TriggerState> trigger_from_letter(char c);
std::optional<TriggerState> trigger_from_name(std::string_view name);

enum class Weather { Sunny, Night, Overcast, Cloudy, Indoor, Other };
enum class Location {
    BusyStreet,
    Road,
    Restaurant,
    PedestrianPath,
    Corridor,
    BicycleLane,
    ShoppingMall,
    Other
};
enum class TrafficFlow : int { Low = 0, Mid = 1, High = 2 };

const char* weather_name(Weather w);
const char* location_name(Location l);
const char* traffic_name(TrafficFlow t);
std::optional<Weather> weather_from_name(std::string_view name);
std::optional<Location> location_from_name(std::string_view name);
std::optional<TrafficFlow> traffic_from_name(std::string_view name);

struct SceneAttributes {
    Weather weather = Weather::Other;
    Location location = Location::Other;
    TrafficFlow traffic_flow = TrafficFlow::Low;
    TriggerState danger = TriggerState::Low;
    std::string scene_description;

    bool operator==(const SceneAttributes&) const = default;
};

/// One decoded RGB video frame. `pixels` is row-major, 3 bytes per pixel.
struct Frame {
    int index = 0;
    std::int64_t timestamp_ms = 0;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    void validate() const;
};

/// Detector output box, normalized to the frame ([0,1] coordinates).
struct Detection {
    std::string label;
    double x = 0, y = 0, w = 0, h = 0;
    double score = 0;

    void validate() const;
};

struct DetectionSet {
    int frame_index = 0;
    std::vector<Detection> detections;
};

/// Bearing as an hour on a clock face; 12 is straight ahead.
struct ClockDirection {
    int hour = 12;
    bool operator==(const ClockDirection&) const = default;
};

/// Distance quantized to multiples of 5 walking steps, minimum 5.
struct StepBucket {
    int steps = 5;
    bool operator==(const StepBucket&) const = default;
};

struct ObjectPrior {
    std::string label;
    ClockDirection direction;
    StepBucket distance;
    double score = 0;
};

enum class ReminderKind {
    Obstacle,
    Intersection,
    RoadWidth,
    OncomingMover,
    RoadDeparture,
    Identifier
};

/// Letter codes A..F used in annotation files, in ReminderKind order.
char reminder_code(ReminderKind k);
std::optional<ReminderKind> reminder_from_code(char c);

struct Reminder {
    std::int64_t timestamp_ms = 0;
    std::set<ReminderKind> kinds;
    std::string text;

    void validate() const;
};

enum class QaKind { ScenePerception, RoadInquiry, DetailedConsultation };

struct QARecord {
    std::int64_t timestamp_ms = 0;
    QaKind kind = QaKind::ScenePerception;
    std::string question;
    std::string answer;
};

struct HazardFlags {
    bool narrow_road = false;
    bool bumpy_road = false;
    bool vehicle_warning = false;
    bool hazard_within_15_steps = false;

    bool any() const { return narrow_road || bumpy_road || vehicle_warning || hazard_within_15_steps; }
};

/// High when any hazard flag is set, Low when traffic is low and nothing is
/// flagged, Mid for everything else.
TriggerState classify_danger(TrafficFlow traffic, const HazardFlags& hazards);

/// Maps an azimuth (degrees, positive to the right of heading) to a clock
/// hour at 30 degrees per hour. Exact half-hour boundaries round toward the
/// larger hour. Throws on non-finite input.
ClockDirection clock_from_angle(double azimuth_deg);

/// Nearest multiple of 5, ties rounding up, never below 5. Throws on
/// non-positive or non-finite input.
StepBucket step_bucket(double steps_estimate);

}  // namespace walkguide
