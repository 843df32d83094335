package com.example.sound;
import android.media.AudioAttributes;

public class ManySounds {
    void ringBoth(android.app.Notification.Builder a, android.app.Notification.Builder b, android.net.Uri tone) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            a.setSound(tone, makeAttrs(5));
        } else {
            a.setSound(tone);
        }
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            b.setSound(tone, makeAttrs(5));
        } else {
            b.setSound(tone);
        }
    }

    static AudioAttributes makeAttrs(int usage) {
        return buildAttrs(usage);
    }

    static AudioAttributes buildAttrs(int usage) {
        return new AudioAttributes.Builder().setUsage(usage).build();
    }
}
