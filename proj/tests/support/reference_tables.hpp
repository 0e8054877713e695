#pragma once

// Reference copies of the bundled dataset contents, embedded so tests can
// verify the shipped data files independently of the loader.

#include <vector>
#include <string>

namespace matcha_testing {

struct KeywordRow { const char* category; const char* type;
                    const char* raw; const char* origin; };

inline const std::vector<KeywordRow>& reference_keyword_rows() {
  static const std::vector<KeywordRow> rows = {
      {"personal_info", "name", "name", "DEFINITION"},
      {"personal_info", "email_address", "email", "DEFINITION"},
      {"personal_info", "user_id", "uid", "DEFINITION"},
      {"personal_info", "user_id", "user id", "DEFINITION"},
      {"personal_info", "address", "home address", "DEFINITION"},
      {"personal_info", "address", "city", "DEFINITION"},
      {"personal_info", "address", "country", "DEFINITION"},
      {"personal_info", "address", "zip code", "DEFINITION"},
      {"personal_info", "phone_number", "phone", "DEFINITION"},
      {"personal_info", "phone_number", "default dialer", "DEFINITION"},
      {"personal_info", "race_and_ethnicity", "race", "DEFINITION"},
      {"personal_info", "race_and_ethnicity", "ethnicity", "DEFINITION"},
      {"personal_info", "race_and_ethnicity", "african", "DEFINITION"},
      {"personal_info", "race_and_ethnicity", "indian", "DEFINITION"},
      {"personal_info", "race_and_ethnicity", "asian", "DEFINITION"},
      {"personal_info", "political_or_religious_beliefs", "political", "DEFINITION"},
      {"personal_info", "political_or_religious_beliefs", "religious", "DEFINITION"},
      {"personal_info", "sexual_orientation", "sexual orientation", "DEFINITION"},
      {"personal_info", "sexual_orientation", "gay", "DEFINITION"},
      {"personal_info", "sexual_orientation", "lesbian", "DEFINITION"},
      {"personal_info", "sexual_orientation", "transgender", "DEFINITION"},
      {"personal_info", "sexual_orientation", "bisexual", "DEFINITION"},
      {"personal_info", "sexual_orientation", "queer", "DEFINITION"},
      {"personal_info", "other_personal_info", "birth", "DEFINITION"},
      {"personal_info", "other_personal_info", "nationality", "DEFINITION"},
      {"personal_info", "other_personal_info", "gender", "DEFINITION"},
      {"personal_info", "other_personal_info", "male", "DEFINITION"},
      {"personal_info", "other_personal_info", "female", "DEFINITION"},
      {"personal_info", "other_personal_info", "non-binary", "DEFINITION"},
      {"personal_info", "other_personal_info", "veteran", "DEFINITION"},
      {"financial_info", "user_payment_info", "credit card", "DEFINITION"},
      {"financial_info", "user_payment_info", "billing", "DEFINITION"},
      {"financial_info", "user_payment_info", "cvv", "DEFINITION"},
      {"financial_info", "user_payment_info", "routing number", "DEFINITION"},
      {"financial_info", "user_payment_info", "account number", "DEFINITION"},
      {"financial_info", "user_payment_info", "bank", "DEFINITION"},
      {"financial_info", "purchase_history", "purchase", "DEFINITION"},
      {"financial_info", "credit_score", "credit score", "DEFINITION"},
      {"financial_info", "other_financial_info", "salary", "DEFINITION"},
      {"financial_info", "other_financial_info", "debt", "DEFINITION"},
      {"calendar", "calendar_events", "calendar", "DEFINITION"},
      {"calendar", "calendar_events", "attendee", "DEFINITION"},
      {"photos_and_videos", "photos", "photo", "DEFINITION"},
      {"photos_and_videos", "photos", "barcode", "DEFINITION"},
      {"photos_and_videos", "photos", "image", "DEFINITION"},
      {"photos_and_videos", "photos", "picture", "DEFINITION"},
      {"photos_and_videos", "photos", "media", "DEFINITION"},
      {"photos_and_videos", "videos", "video", "DEFINITION"},
      {"photos_and_videos", "videos", "recording", "DEFINITION"},
      {"photos_and_videos", "videos", "media", "DEFINITION"},
      {"contacts", "contacts", "contact", "DEFINITION"},
      {"contacts", "contacts", "call history", "DEFINITION"},
      {"contacts", "contacts", "interaction duration", "DEFINITION"},
      {"location", "approximate_location", "location", "DEFINITION"},
      {"location", "approximate_location", "city", "DEFINITION"},
      {"location", "approximate_location", "country", "DEFINITION"},
      {"location", "approximate_location", "ip address", "DEFINITION"},
      {"location", "precise_location", "location", "DEFINITION"},
      {"location", "precise_location", "latitude", "DEFINITION"},
      {"location", "precise_location", "longitude", "DEFINITION"},
      {"health_and_fitness", "health_info", "health", "DEFINITION"},
      {"health_and_fitness", "health_info", "medical", "DEFINITION"},
      {"health_and_fitness", "health_info", "medicine", "DEFINITION"},
      {"health_and_fitness", "health_info", "symptom", "DEFINITION"},
      {"health_and_fitness", "health_info", "disease", "DEFINITION"},
      {"health_and_fitness", "health_info", "doctor", "DEFINITION"},
      {"health_and_fitness", "health_info", "physician", "DEFINITION"},
      {"health_and_fitness", "health_info", "sleep", "DEFINITION"},
      {"health_and_fitness", "health_info", "wellness", "DEFINITION"},
      {"health_and_fitness", "health_info", "therapist", "DEFINITION"},
      {"health_and_fitness", "health_info", "emergency", "DEFINITION"},
      {"health_and_fitness", "health_info", "emergencies", "DEFINITION"},
      {"health_and_fitness", "health_info", "period", "DEFINITION"},
      {"health_and_fitness", "health_info", "pregnancy", "DEFINITION"},
      {"health_and_fitness", "fitness_info", "fitness", "DEFINITION"},
      {"health_and_fitness", "fitness_info", "exercise", "DEFINITION"},
      {"health_and_fitness", "fitness_info", "workout", "DEFINITION"},
      {"health_and_fitness", "fitness_info", "sport", "DEFINITION"},
      {"health_and_fitness", "fitness_info", "diet", "DEFINITION"},
      {"health_and_fitness", "fitness_info", "nutrition", "DEFINITION"},
      {"messages", "emails", "email", "DEFINITION"},
      {"messages", "emails", "sender", "DEFINITION"},
      {"messages", "emails", "recipient", "DEFINITION"},
      {"messages", "emails", "subject", "DEFINITION"},
      {"messages", "sms_or_mms", "message", "DEFINITION"},
      {"messages", "sms_or_mms", "sms", "DEFINITION"},
      {"messages", "sms_or_mms", "mms", "DEFINITION"},
      {"messages", "sms_or_mms", "sender", "DEFINITION"},
      {"messages", "sms_or_mms", "recipient", "DEFINITION"},
      {"messages", "sms_or_mms", "subject", "DEFINITION"},
      {"messages", "in_app_messages", "message", "DEFINITION"},
      {"messages", "in_app_messages", "chat", "DEFINITION"},
      {"messages", "in_app_messages", "reply", "DEFINITION"},
      {"messages", "in_app_messages", "replies", "DEFINITION"},
      {"messages", "in_app_messages", "comment", "DEFINITION"},
      {"messages", "in_app_messages", "sender", "DEFINITION"},
      {"messages", "in_app_messages", "recipient", "DEFINITION"},
      {"messages", "in_app_messages", "subject", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "mac address", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "widevine", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "device id", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "instance id", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "app id", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "advertising id", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "fingerprint", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "user agent", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "unique id", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "token", "DEFINITION"},
      {"device_or_other_ids", "device_or_other_ids", "AdvertisingIdClient", "CORPUS"},
      {"files_and_docs", "files_and_docs", "file", "DEFINITION"},
      {"files_and_docs", "files_and_docs", "document", "DEFINITION"},
      {"files_and_docs", "files_and_docs", "backup", "DEFINITION"},
      {"files_and_docs", "files_and_docs", "restore", "DEFINITION"},
      {"files_and_docs", "files_and_docs", "download", "DEFINITION"},
      {"files_and_docs", "files_and_docs", "storage", "DEFINITION"},
      {"files_and_docs", "files_and_docs", "media", "DEFINITION"},
      {"audio_files", "voice_or_sound_recordings", "voice", "DEFINITION"},
      {"audio_files", "voice_or_sound_recordings", "sound", "DEFINITION"},
      {"audio_files", "voice_or_sound_recordings", "recording", "DEFINITION"},
      {"audio_files", "music_files", "music", "DEFINITION"},
      {"audio_files", "music_files", "song", "DEFINITION"},
      {"app_activity", "app_interactions", "selected", "DEFINITION"},
      {"app_activity", "app_interactions", "visit number", "DEFINITION"},
      {"app_activity", "app_interactions", "view number", "DEFINITION"},
      {"app_activity", "app_interactions", "getItemAtPosition", "CORPUS"},
      {"app_activity", "app_interactions", "getItemIdAtPosition", "CORPUS"},
      {"app_activity", "app_interactions", "AccessibilityService", "CORPUS"},
      {"app_activity", "app_interactions", "TextService", "CORPUS"},
      {"app_activity", "app_interactions", "Instrumentation", "CORPUS"},
      {"app_activity", "app_interactions", "shortcut", "DEFINITION"},
      {"app_activity", "installed_apps", "installed app", "DEFINITION"},
      {"app_activity", "in_app_search_history", "search", "DEFINITION"},
      {"app_activity", "other_user_generated_content", "bios", "DEFINITION"},
      {"app_activity", "other_user_generated_content", "note", "DEFINITION"},
      {"app_activity", "other_user_generated_content", "response", "DEFINITION"},
      {"app_activity", "other_user_activities", "gameplay", "DEFINITION"},
      {"app_activity", "other_user_activities", "dialog option", "DEFINITION"},
      {"web_browsing", "web_browsing_history", "browser", "DEFINITION"},
      {"web_browsing", "web_browsing_history", "cookie", "DEFINITION"},
      {"web_browsing", "web_browsing_history", "browser cache", "DEFINITION"},
      {"web_browsing", "web_browsing_history", "browsing cache", "DEFINITION"},
      {"web_browsing", "web_browsing_history", "search", "DEFINITION"},
      {"web_browsing", "web_browsing_history", "web view", "DEFINITION"},
      {"app_info_and_performance", "crash_logs", "crash", "DEFINITION"},
      {"app_info_and_performance", "crash_logs", "stack trace", "DEFINITION"},
      {"app_info_and_performance", "diagnostics", "ActivityManager", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "ApplicationErrorReport", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "ApplicationExitInfo", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "BatteryManager", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "Benchmark", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "Debug", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "HealthStats", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "Macrobenchmark", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "PowerManager", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "StrictMode", "CORPUS"},
      {"app_info_and_performance", "diagnostics", "battery", "DEFINITION"},
      {"app_info_and_performance", "diagnostics", "loading time", "DEFINITION"},
      {"app_info_and_performance", "diagnostics", "latency", "DEFINITION"},
      {"app_info_and_performance", "diagnostics", "frame rate", "DEFINITION"},
      {"app_info_and_performance", "diagnostics", "diagnostics", "DEFINITION"},
      {"app_info_and_performance", "other_app_performance_data", "performance", "DEFINITION"},
      {"personal_info", "name", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "name", "GET_ACCOUNTS", "PERMISSION"},
      {"personal_info", "email_address", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "email_address", "GET_ACCOUNTS", "PERMISSION"},
      {"personal_info", "user_id", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "user_id", "GET_ACCOUNTS", "PERMISSION"},
      {"personal_info", "address", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "address", "GET_ACCOUNTS", "PERMISSION"},
      {"personal_info", "phone_number", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "phone_number", "GET_ACCOUNTS", "PERMISSION"},
      {"personal_info", "phone_number", "READ_CALL_LOG", "PERMISSION"},
      {"personal_info", "phone_number", "READ_PHONE_NUMBERS", "PERMISSION"},
      {"personal_info", "phone_number", "READ_PHONE_STATE", "PERMISSION"},
      {"personal_info", "phone_number", "READ_SMS", "PERMISSION"},
      {"personal_info", "race_and_ethnicity", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "race_and_ethnicity", "GET_ACCOUNTS", "PERMISSION"},
      {"personal_info", "political_or_religious_beliefs", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "political_or_religious_beliefs", "GET_ACCOUNTS", "PERMISSION"},
      {"personal_info", "sexual_orientation", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "sexual_orientation", "GET_ACCOUNTS", "PERMISSION"},
      {"personal_info", "other_personal_info", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"personal_info", "other_personal_info", "GET_ACCOUNTS", "PERMISSION"},
      {"financial_info", "user_payment_info", "BIND_AUTOFILL_SERVICE", "PERMISSION"},
      {"calendar", "calendar_events", "READ_CALENDAR", "PERMISSION"},
      {"calendar", "calendar_events", "WRITE_CALENDAR", "PERMISSION"},
      {"photos_and_videos", "photos", "READ_EXTERNAL_STORAGE", "PERMISSION"},
      {"photos_and_videos", "photos", "WRITE_EXTERNAL_STORAGE", "PERMISSION"},
      {"photos_and_videos", "videos", "READ_EXTERNAL_STORAGE", "PERMISSION"},
      {"photos_and_videos", "videos", "WRITE_EXTERNAL_STORAGE", "PERMISSION"},
      {"contacts", "contacts", "ACCEPT_HANDOVER", "PERMISSION"},
      {"contacts", "contacts", "ADD_VOICEMAIL", "PERMISSION"},
      {"contacts", "contacts", "ANSWER_PHONE_CALLS", "PERMISSION"},
      {"contacts", "contacts", "CALL_PHONE", "PERMISSION"},
      {"contacts", "contacts", "PROCESS_OUTGOING_CALLS", "PERMISSION"},
      {"contacts", "contacts", "READ_CALL_LOG", "PERMISSION"},
      {"contacts", "contacts", "READ_CONTACTS", "PERMISSION"},
      {"contacts", "contacts", "READ_PHONE_NUMBERS", "PERMISSION"},
      {"contacts", "contacts", "READ_PHONE_STATE", "PERMISSION"},
      {"contacts", "contacts", "READ_SMS", "PERMISSION"},
      {"contacts", "contacts", "RECEIVE_MMS", "PERMISSION"},
      {"contacts", "contacts", "RECEIVE_SMS", "PERMISSION"},
      {"contacts", "contacts", "RECEIVE_WAP_PUSH", "PERMISSION"},
      {"contacts", "contacts", "SEND_SMS", "PERMISSION"},
      {"contacts", "contacts", "WRITE_CONTACTS", "PERMISSION"},
      {"location", "approximate_location", "ACCESS_COARSE_LOCATION", "PERMISSION"},
      {"location", "approximate_location", "ACCESS_MEDIA_LOCATION", "PERMISSION"},
      {"location", "precise_location", "ACCESS_FINE_LOCATION", "PERMISSION"},
      {"location", "precise_location", "ACCESS_MEDIA_LOCATION", "PERMISSION"},
      {"health_and_fitness", "health_info", "ACTIVITY_RECOGNITION", "PERMISSION"},
      {"health_and_fitness", "health_info", "BODY_SENSORS", "PERMISSION"},
      {"health_and_fitness", "fitness_info", "ACTIVITY_RECOGNITION", "PERMISSION"},
      {"health_and_fitness", "fitness_info", "BODY_SENSORS", "PERMISSION"},
      {"messages", "sms_or_mms", "READ_SMS", "PERMISSION"},
      {"messages", "sms_or_mms", "RECEIVE_MMS", "PERMISSION"},
      {"messages", "sms_or_mms", "RECEIVE_SMS", "PERMISSION"},
      {"messages", "sms_or_mms", "RECEIVE_WAP_PUSH", "PERMISSION"},
      {"messages", "sms_or_mms", "SEND_SMS", "PERMISSION"},
      {"messages", "sms_or_mms", "WRITE_SMS", "PERMISSION"},
      {"device_or_other_ids", "device_or_other_ids", "AD_ID", "PERMISSION"},
      {"device_or_other_ids", "device_or_other_ids", "READ_PRIVILEGED_PHONE_STATE", "PERMISSION"},
      {"files_and_docs", "files_and_docs", "READ_EXTERNAL_STORAGE", "PERMISSION"},
      {"files_and_docs", "files_and_docs", "WRITE_EXTERNAL_STORAGE", "PERMISSION"},
      {"files_and_docs", "files_and_docs", "MANAGE_EXTERNAL_STORAGE", "PERMISSION"},
      {"audio_files", "voice_or_sound_recordings", "CAPTURE_AUDIO_OUTPUT", "PERMISSION"},
      {"audio_files", "voice_or_sound_recordings", "RECORD_AUDIO", "PERMISSION"},
      {"audio_files", "voice_or_sound_recordings", "READ_EXTERNAL_STORAGE", "PERMISSION"},
      {"audio_files", "voice_or_sound_recordings", "WRITE_EXTERNAL_STORAGE", "PERMISSION"},
      {"audio_files", "music_files", "READ_EXTERNAL_STORAGE", "PERMISSION"},
      {"audio_files", "music_files", "WRITE_EXTERNAL_STORAGE", "PERMISSION"},
      {"audio_files", "other_user_audio_files", "CAPTURE_AUDIO_OUTPUT", "PERMISSION"},
      {"audio_files", "other_user_audio_files", "RECORD_AUDIO", "PERMISSION"},
      {"audio_files", "other_user_audio_files", "READ_EXTERNAL_STORAGE", "PERMISSION"},
      {"audio_files", "other_user_audio_files", "WRITE_EXTERNAL_STORAGE", "PERMISSION"},
      {"app_activity", "app_interactions", "QUERY_ALL_PACKAGES", "PERMISSION"},
      {"app_info_and_performance", "diagnostics", "BATTERY_STATS", "PERMISSION"},
  };
  return rows;
}

struct SdkRow { const char* sdk_id; const char* display_name;
                std::vector<std::string> patterns; };

inline const std::vector<SdkRow>& reference_sdk_rows() {
  static const std::vector<SdkRow> rows = {
      {"admob", "AdMob", {".*com.google.android.gms:play-services-ads.*", ".*com.google.android.gms:play-services-ads-lite.*"}},
      {"ironsource", "Ironsource", {".*com.ironsource.sdk:mediationsdk.*"}},
      {"vungle", "Vungle", {".*com.vungle:publisher-sdk-android.*"}},
      {"appsflyer", "AppsFlyer", {".*com.appsflyer:af-android-sdk.*"}},
      {"adjust", "Adjust", {".*com.adjust.sdk:adjust-android.*", ".*com.android.installreferrer:installreferrer.*", ".*com.adjust.sdk:adjust-android-webbridge.*"}},
      {"chartboost", "Chartboost", {".*com.chartboost:chartboost-sdk.*"}},
      {"tapjoy", "Tapjoy", {".*com.tapjoy:tapjoy-android-sdk.*"}},
      {"google-play-games-services", "Google Play Games Services", {".*com.google.android.gms:play-services-games.*"}},
      {"firebase-auth", "Firebase Authentication", {".*com.google.firebase:firebase-auth.*", ".*com.google.firebase:firebase-auth-ktx.*"}},
      {"firebase-app-check", "Firebase App Check", {".*com.google.firebase:firebase-appcheck.*", ".*com.google.firebase:firebase-appcheck-debug.*", ".*com.google.firebase:firebase-appcheck-safetynet.*", ".*com.google.firebase:firebase-appcheck-playintegrity.*"}},
      {"firebase-firestore", "Firebase Cloud Firestore", {".*com.google.firebase:firebase-firestore.*", ".*com.google.firebase:firebase-firestore-ktx.*"}},
      {"firebase-functions", "Cloud Functions for Firebase", {".*com.google.firebase:firebase-functions.*", ".*com.google.firebase:firebase-functions-ktx.*"}},
      {"firebase-messaging", "Firebase Cloud Messaging", {".*com.google.firebase:firebase-messaging.*", ".*com.google.firebase:firebase-messaging-ktx.*"}},
      {"firebase-storage", "Cloud Storage for Firebase", {".*com.google.firebase:firebase-storage.*", ".*com.google.firebase:firebase-storage-ktx.*"}},
      {"crashlytics", "Crashlytics", {".*com.google.firebase:firebase-crashlytics.*", ".*com.google.firebase:firebase-crashlytics-ktx.*", ".*com.google.firebase:firebase-crashlytics-ndk.*"}},
      {"firebase-dynamic-links", "Dynamic Links", {".*com.google.firebase:firebase-dynamic-links.*", ".*com.google.firebase:firebase-dynamic-links-ktx.*"}},
      {"google-analytics-for-firebase", "Google Analytics", {".*com.google.firebase:firebase-analytics.*", ".*com.google.firebase:firebase-analytics-ktx.*"}},
      {"firebase-inappmessaging", "Firebase In-App Messaging", {".*com.google.firebase:firebase-inappmessaging.*", ".*com.google.firebase:firebase-inappmessaging-display.*", ".*com.google.firebase:firebase-inappmessaging-ktx.*", ".*com.google.firebase:firebase-inappmessaging-display-ktx.*"}},
      {"firebase-installations", "Firebase Installations", {".*com.google.firebase:firebase-installations.*", ".*com.google.firebase:firebase-installations-ktx.*"}},
      {"firebase-ml-modeldownloader", "Firebase ML model downloader", {".*com.google.firebase:firebase-ml-modeldownloader.*", ".*com.google.firebase:firebase-ml-modeldownloader-ktx.*"}},
      {"firebase-performance", "Performance Monitoring", {".*com.google.firebase:firebase-perf.*", ".*com.google.firebase:firebase-perf-ktx.*"}},
      {"firebase-database", "Realtime Database", {".*com.google.firebase:firebase-database.*", ".*com.google.firebase:firebase-database-ktx.*"}},
      {"firebase-remote-config", "Remote Config", {".*com.google.firebase:firebase-config.*", ".*com.google.firebase:firebase-config-ktx.*"}},
      {"revenuecat", "RevenueCat", {".*com.revenuecat.purchases:purchases.*", ".*com.revenuecat.purchases:purchases-store-amazon.*"}},
      {"user-messaging-platform", "User Messaging Platform SDK", {".*com.google.android.ump:user-messaging-platform.*"}},
      {"recaptcha-enterprise", "reCAPTCHA Enterprise", {".*com.google.android.gms:play-services-recaptcha.*"}},
      {"arcore", "ARCore", {".*com.google.ar:core:.*"}},
      {"ml-kit", "ML Kit", {".*com.google.android.gms:play-services-mlkit-barcode-scanning.*", ".*com.google.android.gms:play-services-mlkit-face-detection.*", ".*com.google.android.gms:play-services-mlkit-image-labeling.*", ".*com.google.android.gms:play-services-mlkit-image-labeling-custom.*", ".*com.google.android.gms:play-services-mlkit-language-id.*", ".*com.google.android.gms:play-services-mlkit-text-recognition.*", ".*com.google.android.gms:play-services-code-scanner.*", ".*com.google.mlkit:barcode-scanning.*", ".*com.google.mlkit:camera.*", ".*com.google.mlkit:digital-ink-recognition.*", ".*com.google.mlkit:entity-extraction.*", ".*com.google.mlkit:face-detection.*", ".*com.google.mlkit:image-labeling.*", ".*com.google.mlkit:image-labeling-custom.*", ".*com.google.mlkit:language-id.*", ".*com.google.mlkit:linkfirebase.*", ".*com.google.mlkit:object-detection.*", ".*com.google.mlkit:object-detection-custom.*", ".*com.google.mlkit:playstore-dynamic-feature-support.*", ".*com.google.mlkit:pose-detection.*", ".*com.google.mlkit:pose-detection-accurate.*", ".*com.google.mlkit:segmentation-selfie.*", ".*com.google.mlkit:smart-reply.*", ".*com.google.mlkit:text-recognition.*", ".*com.google.mlkit:text-recognition-chinese.*", ".*com.google.mlkit:text-recognition-devanagari.*", ".*com.google.mlkit:text-recognition-japanese.*", ".*com.google.mlkit:text-recognition-korean.*", ".*com.google.mlkit:translate.*"}},
      {"google-cast-tv", "Google Cast (cast-tv)", {".*com.google.android.gms:play-services-cast-tv.*"}},
      {"google-maps", "Google Maps", {".*com.google.android.gms:play-services-maps.*"}},
      {"google-pay-wallet", "Google Pay - Wallet SDK", {".*com.google.android.gms:play-services-wallet.*"}},
      {"google-pay-tapandpay", "Google Pay - TapandPay SDK", {".*com.google.android.gms:play-services-tapandpay.*"}},
      {"safetynet", "SafetyNet", {".*com.google.android.gms:play-services-safetynet.*"}},
      {"play-integrity", "Google Play Integrity", {".*com.google.android.play:integrity.*"}},
      {"snowplow", "Snowplow Android Tracker", {".*com.snowplowanalytics:snowplow-android-tracker.*"}},
      {"kochava", "Kochava", {".*com.kochava.base:tracker.*"}},
      {"airship", "Airship SDK", {".*com.urbanairship.android:urbanairship-fcm.*", ".*com.urbanairship.android:urbanairship-hms.*", ".*com.urbanairship.android:urbanairship-message-center.*", ".*com.urbanairship.android:urbanairship-adm.*", ".*com.urbanairship.android:urbanairship-preference-center.*", ".*com.urbanairship.android:urbanairship-automation.*"}},
      {"appodeal", "Appodeal SDK for Android", {".*com.appodeal.ads:sdk.*"}},
      {"apptentive", "Apptentive", {".*com.apptentive:apptentive-android.*"}},
      {"branch", "Branch", {".*io.branch.sdk.android:library.*"}},
      {"braze", "Braze Android SDK", {".*com.appboy:android-sdk-ui.*"}},
      {"bugsnag", "Bugsnag", {".*com.bugsnag:bugsnag-android.*"}},
      {"clevertap", "CleverTap Android SDK", {".*com.clevertap.android:clevertap-android-sdk.*"}},
      {"fyber-marketplace", "Fyber Marketplace SDK", {".*com.fyber:marketplace-sdk.*"}},
      {"hyprmx", "HyprMX", {".*com.hyprmx.android:HyprMX-SDK.*"}},
      {"instabug", "Instabug", {".*com.instabug.library:instabug.*"}},
      {"ima-sdk", "Interactive Media Ads (IMA) SDK", {".*com.google.ads.interactivemedia.v3:interactivemedia.*"}},
      {"moengage", "MoEngage Android SDK", {".*com.moengage:moe-android-sdk.*"}},
      {"ogury", "Ogury SDK", {".*co.ogury:ogury-sdk.*"}},
      {"pangle", "Pangle Ad SDK", {".*com.pangle.global:ads-sdk.*"}},
      {"pollfish", "Pollfish", {".*com.pollfish:pollfish-googleplay.*"}},
      {"pubmatic-openwrap", "PubMatic OpenWrap SDK", {".*com.pubmatic.sdk:openwrap.*"}},
      {"singular", "Singular SDK", {".*com.singular.sdk:singular_sdk.*"}},
      {"smaato", "Smaato NextGen SDK", {".*com.smaato.android.sdk:smaato-sdk.*", ".*com.smaato.android.sdk:smaato-sdk-rewarded-ads.*", ".*com.smaato.android.sdk:smaato-sdk-banner.*", ".*com.smaato.android.sdk:smaato-sdk-interstitial.*"}},
      {"startio", "Start.io (Formerly StartApp)", {".*com.startapp:inapp-sdk.*"}},
      {"taboola", "Taboola SDK", {".*com.taboola:android-sdk.*"}},
      {"verve-hybid", "Verve Group HyBid SDK (formerly PubNative)", {".*net.pubnative:hybid.sdk.*"}},
  };
  return rows;
}

}  // namespace matcha_testing
