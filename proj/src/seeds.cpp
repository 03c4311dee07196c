#include "crossdep/seeds.hpp"

namespace crossdep::seeds {

namespace {

// Small helper so the tree reads like the figure it encodes.
struct Builder {
  Ontology& onto;

  ConceptId domain(std::string_view label) {
    return onto.add_concept(std::nullopt, label, ConceptKind::Domain);
  }
  ConceptId cls(const ConceptId& parent, std::string_view label) {
    return onto.add_concept(parent, label, ConceptKind::Class);
  }
  ConceptId sub(const ConceptId& parent, std::string_view label) {
    return onto.add_concept(parent, label, ConceptKind::SubClass);
  }
  void feature(const ConceptId& parent, std::string_view label) {
    onto.add_concept(parent, label, ConceptKind::Feature);
  }
};

}  // namespace

Ontology smart_home() {
  Ontology onto("smart_home", "Smart Home Data Ontology");
  Builder b{onto};

  // Building Information
  ConceptId building = b.domain("Building Information");
  ConceptId address = b.cls(building, "Address");
  b.feature(address, "Latitude");
  b.feature(address, "Longitude");
  ConceptId spaces = b.cls(building, "Building Spaces");
  b.sub(spaces, "Livingroom");
  b.sub(spaces, "Bedroom");
  b.sub(spaces, "Hallway");
  b.sub(spaces, "Kitchen");
  ConceptId resources = b.cls(building, "Building Resources");
  b.sub(resources, "Lighting");
  ConceptId heating = b.sub(resources, "Heating");
  ConceptId heating_system = b.sub(heating, "Heating System");
  b.feature(heating_system, "Combo Boiler");
  b.feature(heating_system, "System Boiler");
  b.feature(heating_system, "Back Boiler");
  ConceptId distribution = b.sub(heating, "Distribution System");
  b.feature(distribution, "No. of Radiators");
  b.feature(distribution, "Size of Radiators");
  b.feature(distribution, "Water Tank");
  ConceptId appliances = b.sub(resources, "Appliances");
  ConceptId app_mode = b.sub(appliances, "Application Mode");
  b.feature(app_mode, "Off");
  b.feature(app_mode, "On");
  b.feature(app_mode, "Stand By");
  ConceptId basic = b.cls(building, "Basic Information");
  b.sub(basic, "EPC Rating");
  b.sub(basic, "Air Test");
  b.sub(basic, "Archetype");
  b.sub(basic, "Ownership");
  b.sub(basic, "Building Age");
  b.sub(basic, "BIM Model");
  ConceptId physical = b.sub(basic, "Physical Attributes");
  ConceptId fabric = b.sub(physical, "Fabric Efficiency");
  b.feature(fabric, "Level of Insulation");
  b.feature(fabric, "Quality of Building");
  b.feature(fabric, "Orientation Level");
  b.feature(fabric, "Design Decisions");
  b.feature(fabric, "Ventilation");

  // Neighbourhood/Regional Information
  ConceptId neighbourhood = b.domain("Neighbourhood/Regional Information");
  ConceptId site = b.cls(neighbourhood, "Site Information");
  b.sub(site, "City");
  ConceptId hood = b.sub(site, "Neighbourhood");
  b.feature(hood, "Lower Layer Super Output (LSOA)");
  ConceptId facilities = b.sub(site, "Local facilities");
  b.feature(facilities, "Grid (Nearest substation)");
  b.feature(facilities, "Sub stations");
  b.cls(neighbourhood, "Climate information");

  // Environmental Factors
  ConceptId environmental = b.domain("Environmental Factors");
  ConceptId parameter = b.cls(environmental, "Environmental parameter");
  b.feature(parameter, "Temperature");
  b.feature(parameter, "Humidity");
  ConceptId air = b.sub(parameter, "Air quality");
  ConceptId pollution = b.sub(air, "Pollution level");
  b.feature(pollution, "Carbon mono oxide (CO)");
  b.feature(pollution, "Nitrogen di oxide (NO)");
  b.feature(pollution, "Volatile organic components (VOC)");
  ConceptId particulates = b.sub(pollution, "Particulates");
  b.feature(particulates, "Dust");
  b.feature(particulates, "Smoke particles");
  b.feature(air, "Pollen level");
  b.feature(parameter, "Noise level");
  ConceptId weather = b.cls(environmental, "Weather");
  b.feature(weather, "Dry");
  ConceptId rain = b.sub(weather, "Rain");
  b.feature(rain, "Rainfall");
  ConceptId snow = b.sub(weather, "Snow");
  b.feature(snow, "Snowfall");
  ConceptId wind = b.sub(weather, "Wind");
  b.feature(wind, "Wind speed");
  b.feature(wind, "Direction of speed over time");

  // Human Factors
  ConceptId human = b.domain("Human Factors");
  ConceptId demographic = b.cls(human, "Demographic information");
  b.feature(demographic, "Age");
  b.feature(demographic, "Gender");
  b.feature(demographic, "Occupation");
  b.feature(demographic, "Awareness");
  b.feature(demographic, "Health status");
  b.feature(demographic, "Ethnicity");
  ConceptId family = b.sub(demographic, "Family composition");
  b.feature(family, "Single");
  b.feature(family, "Couple");
  ConceptId couple_children = b.sub(family, "Couple with children");
  b.feature(couple_children, "Children with primary age");
  b.feature(couple_children, "Children with secondary age");
  ConceptId behavioural = b.cls(human, "Behavioural information");
  ConceptId preferences = b.sub(behavioural, "Personal preferences");
  ConceptId attitude = b.sub(preferences, "Attitude");
  b.feature(attitude, "Financial");
  b.feature(attitude, "Ethical attributes");
  b.feature(behavioural, "Thermal comfort");
  b.feature(behavioural, "Visual comfort");

  // Services
  ConceptId services = b.domain("Services");
  ConceptId primary = b.cls(services, "Primary service");
  b.feature(primary, "Heating");
  b.feature(primary, "Cooling");
  ConceptId secondary = b.cls(services, "Secondary service");
  b.feature(secondary, "Appliances");
  b.feature(secondary, "Lighting");
  ConceptId energy = b.cls(services, "Energy");
  b.feature(energy, "Electricity");
  b.feature(energy, "Gas");
  b.feature(energy, "Renewable energy usage");

  return onto;
}

Ontology ict() {
  Ontology onto("ict", "ICT Ontology");
  Builder b{onto};

  ConceptId big_data = b.domain("Big Data Management");
  b.cls(big_data, "Historical Data");

  ConceptId devices = b.domain("Devices");
  ConceptId sensors = b.cls(devices, "Sensors");
  b.feature(sensors, "Occupancy Sensor");

  b.domain("Communication Infrastructure");

  ConceptId decisions = b.domain("Decision Making/Policy Making");
  b.cls(decisions, "Reasoning Engine");

  return onto;
}

std::vector<CrossLink> case_study_links() {
  return {
      {ConceptId::parse("ict:devices.sensors.occupancy_sensor"),
       ConceptId::parse("smart_home:building_information.building_spaces"),
       "monitors"},
      {ConceptId::parse("ict:big_data_management.historical_data"),
       ConceptId::parse("smart_home:human_factors.behavioural_information"),
       "records"},
      {ConceptId::parse("ict:decision_making_policy_making.reasoning_engine"),
       ConceptId::parse("smart_home:building_information.building_resources."
                        "appliances.application_mode"),
       "controls"},
  };
}

std::vector<Requirement> requirements() {
  auto ids = [](std::initializer_list<const char*> texts) {
    std::vector<ConceptId> out;
    for (const char* t : texts) out.push_back(ConceptId::parse(t));
    return out;
  };

  std::vector<Requirement> reqs;
  auto add = [&](Stakeholder s, int index, std::string text,
                 std::vector<ConceptId> concepts) {
    reqs.push_back(Requirement{s, index, std::move(text), std::move(concepts)});
  };

  using enum Stakeholder;
  add(Occupiers, 1, "Increased comfort level",
      ids({"smart_home:human_factors.behavioural_information.thermal_comfort",
           "smart_home:human_factors.behavioural_information.visual_comfort"}));
  add(Occupiers, 2, "Tracking energy consumption",
      ids({"smart_home:services.energy.electricity",
           "smart_home:services.energy.gas",
           "smart_home:services.energy.renewable_energy_usage"}));
  add(Occupiers, 3, "Energy consumption patterns per day/month/year",
      ids({"smart_home:services.energy"}));
  add(Occupiers, 4, "Load shifting",
      ids({"smart_home:building_information.building_resources.appliances."
           "application_mode"}));
  add(Occupiers, 5, "Cost estimation", ids({"smart_home:services.energy"}));
  add(Occupiers, 6, "Cost Effectiveness",
      ids({"smart_home:services.energy",
           "smart_home:building_information.basic_information.epc_rating"}));
  add(Occupiers, 7, "Customer Behaviour- Impact analysis",
      ids({"smart_home:human_factors.behavioural_information"}));
  add(Occupiers, 8, "Anomaly Detection",
      ids({"smart_home:services.energy",
           "smart_home:building_information.building_resources.appliances"}));

  add(EnergyProviders, 1, "Demand and supply monitoring",
      ids({"smart_home:services.energy"}));
  add(EnergyProviders, 2, "Demand and supply balance",
      ids({"smart_home:services.energy"}));
  add(EnergyProviders, 3, "Load prediction",
      ids({"smart_home:human_factors.behavioural_information."
           "personal_preferences",
           "smart_home:services.energy"}));
  add(EnergyProviders, 4, "Transformer load management",
      ids({"smart_home:neighbourhood_regional_information.site_information."
           "local_facilities.grid_nearest_substation",
           "smart_home:neighbourhood_regional_information.site_information."
           "local_facilities.sub_stations"}));
  add(EnergyProviders, 5, "Energy consumption patterns per day/month/year",
      ids({"smart_home:services.energy"}));
  add(EnergyProviders, 6, "Environmental impact",
      ids({"smart_home:environmental_factors.environmental_parameter"}));
  add(EnergyProviders, 7, "Decarbonisation",
      ids({"smart_home:services.energy.renewable_energy_usage"}));

  add(HousingAgencies, 1, "Increased comfort level",
      ids({"smart_home:human_factors.behavioural_information.thermal_comfort",
           "smart_home:human_factors.behavioural_information.visual_comfort"}));
  add(HousingAgencies, 2,
      "Relative humidity rate- to avoid condensation, Dump or Mould",
      ids({"smart_home:environmental_factors.environmental_parameter."
           "humidity"}));
  add(HousingAgencies, 3, "Cost estimation",
      ids({"smart_home:services.energy"}));
  add(HousingAgencies, 4, "Cost effectiveness",
      ids({"smart_home:building_information.basic_information.epc_rating"}));
  add(HousingAgencies, 5, "Customer behaviour- Impact analysis",
      ids({"smart_home:human_factors.behavioural_information"}));
  add(HousingAgencies, 6, "Energy consumption patterns",
      ids({"smart_home:services.energy"}));
  add(HousingAgencies, 7, "Demand and supply monitoring",
      ids({"smart_home:services.energy"}));
  add(HousingAgencies, 8, "Environmental Impact- Eco Impact",
      ids({"smart_home:environmental_factors.environmental_parameter"}));

  add(Government, 1, "Comfort level",
      ids({"smart_home:human_factors.behavioural_information.thermal_comfort",
           "smart_home:human_factors.behavioural_information.visual_comfort"}));
  add(Government, 2, "Revenue protection", {});  // strategic, no data concept
  add(Government, 3, "Saving energy", ids({"smart_home:services.energy"}));
  add(Government, 4, "Energy usage per month or per year",
      ids({"smart_home:services.energy"}));
  add(Government, 5, "Environmental Impact-Eco Impact",
      ids({"smart_home:environmental_factors.environmental_parameter"}));
  add(Government, 6, "Decarbonisation",
      ids({"smart_home:services.energy.renewable_energy_usage"}));

  return reqs;
}

std::vector<ConceptId> ict_provenance() {
  return {
      ConceptId::parse("ict:devices.sensors"),
      ConceptId::parse("ict:decision_making_policy_making.reasoning_engine"),
  };
}

}  // namespace crossdep::seeds
