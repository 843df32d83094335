package com.example.sound;

public class ManySounds {
    void ringBoth(android.app.Notification.Builder a, android.app.Notification.Builder b, android.net.Uri tone) {
        a.setSound(tone);
        b.setSound(tone);
    }
}
